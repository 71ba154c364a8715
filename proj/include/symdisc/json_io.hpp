#pragma once

#include <json.hpp>
#include <string>

#include "symdisc/approx.hpp"
#include "symdisc/error.hpp"
#include "symdisc/factor.hpp"
#include "symdisc/pick.hpp"
#include "symdisc/realization.hpp"
#include "symdisc/rif.hpp"
#include "symdisc/sympoly.hpp"

namespace symdisc::io {

using Json = nlohmann::ordered_json;

// Every parser throws SchemaError on missing keys, wrong types or shape
// inconsistencies, and re-validates the domain invariants of the result.

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const MultiPoly& f);
MultiPoly poly_from_json(const Json& j);

Json to_json(const RationalInnerFn& f);
RationalInnerFn rif_from_json(const Json& j);

Json to_json(const Colligation& v);
Colligation colligation_from_json(const Json& j);

Json to_json(const StructuredColligation& v);
StructuredColligation structured_from_json(const Json& j);

Json to_json(const PickProblem& p);
PickProblem problem_from_json(const Json& j);

/// {"stages": [{"nodes": n, "sup_dev": x}, ...]}
Json to_json(const ApproxRun& run);

Json to_json(const Error& e);

Json read_file(const std::string& path);
/// Pretty-printed with a trailing newline; "-" writes to stdout.
void write_file(const std::string& path, const Json& j);

}  // namespace symdisc::io

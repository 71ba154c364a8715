#include "symdisc/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace symdisc::io {
namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorCode::SchemaError, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing key '") + key + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) schema(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) schema(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 0) schema(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

// Domain errors raised while re-validating parsed values are schema errors
// from the caller's point of view.
template <class F>
auto revalidate(const char* what, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    throw Error(ErrorCode::SchemaError, std::string(what) + ": " + e.what(), e.residual());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) schema("complex value must be [re, im]");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (const auto& z : m.data()) data.push_back(to_json(z));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t r = count(field(j, "rows"), "rows");
  const std::size_t c = count(field(j, "cols"), "cols");
  const Json& data = field(j, "data");
  if (!data.is_array()) schema("data must be an array");
  if (data.size() != r * c) schema("data length does not match rows x cols");
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (const auto& z : data) entries.push_back(complex_from_json(z));
  return revalidate("matrix", [&] { return ComplexMatrix(r, c, std::move(entries)); });
}

Json to_json(const MultiPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exp", e}, {"coef", to_json(c)}});
  return Json{{"dim", f.dim()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const Json& j) {
  const std::size_t dim = count(field(j, "dim"), "dim");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) schema("terms must be an array");
  MultiPoly f(dim);
  for (const auto& t : terms) {
    const Json& e = field(t, "exp");
    if (!e.is_array()) schema("exp must be an array");
    Exponent exp;
    for (const auto& x : e) exp.push_back(static_cast<int>(count(x, "exponent")));
    const Complex c = complex_from_json(field(t, "coef"));
    revalidate("polynomial term", [&] {
      f.add_term(exp, c);
      return 0;
    });
  }
  return f;
}

Json to_json(const RationalInnerFn& f) {
  return Json{{"d", f.d}, {"k", f.k}, {"tau", to_json(f.tau)}, {"xi", to_json(f.xi)}};
}

RationalInnerFn rif_from_json(const Json& j) {
  const std::size_t d = count(field(j, "d"), "d");
  const auto k = static_cast<int>(count(field(j, "k"), "k"));
  const Complex tau = complex_from_json(field(j, "tau"));
  const MultiPoly xi = poly_from_json(field(j, "xi"));
  if (xi.dim() != d) schema("xi.dim differs from d");
  return revalidate("rational inner function", [&] { return make_rif(xi, k, tau); });
}

Json to_json(const Colligation& v) {
  return Json{{"tau", to_json(v.tau)}, {"A", to_json(v.A)}, {"B", to_json(v.B)},
              {"C", to_json(v.C)}, {"D", to_json(v.D)}};
}

Colligation colligation_from_json(const Json& j) {
  Colligation v{matrix_from_json(field(j, "tau")), matrix_from_json(field(j, "A")),
                matrix_from_json(field(j, "B")), matrix_from_json(field(j, "C")),
                matrix_from_json(field(j, "D"))};
  revalidate("colligation", [&] {
    v.validate();
    return 0;
  });
  return v;
}

Json to_json(const StructuredColligation& v) {
  Json j = to_json(v.V);
  j["h1"] = v.h1;
  j["h2"] = v.h2;
  return j;
}

StructuredColligation structured_from_json(const Json& j) {
  StructuredColligation v;
  v.V = colligation_from_json(j);
  v.h1 = count(field(j, "h1"), "h1");
  v.h2 = count(field(j, "h2"), "h2");
  revalidate("structured colligation", [&] {
    v.validate();
    return 0;
  });
  return v;
}

Json to_json(const PickProblem& p) {
  Json nodes = Json::array(), targets = Json::array();
  for (const auto& w : p.nodes)
    nodes.push_back(Json::array({w[0].real(), w[0].imag(), w[1].real(), w[1].imag()}));
  for (const auto& t : p.targets) targets.push_back(to_json(t));
  return Json{{"nodes", std::move(nodes)}, {"targets", std::move(targets)}};
}

PickProblem problem_from_json(const Json& j) {
  PickProblem p;
  const Json& nodes = field(j, "nodes");
  const Json& targets = field(j, "targets");
  if (!nodes.is_array() || !targets.is_array()) schema("nodes and targets must be arrays");
  for (const auto& n : nodes) {
    if (!n.is_array() || n.size() != 4) schema("node must be [s_re, s_im, p_re, p_im]");
    p.nodes.push_back({Complex(number(n[0], "s_re"), number(n[1], "s_im")),
                       Complex(number(n[2], "p_re"), number(n[3], "p_im"))});
  }
  for (const auto& t : targets) p.targets.push_back(matrix_from_json(t));
  revalidate("pick problem", [&] {
    p.validate();
    return 0;
  });
  return p;
}

Json to_json(const ApproxRun& run) {
  Json stages = Json::array();
  for (const auto& s : run.stages) stages.push_back(Json{{"nodes", s.nodes}, {"sup_dev", s.sup_dev}});
  return Json{{"stages", std::move(stages)}};
}

Json to_json(const Error& e) {
  Json j{{"error", std::string(to_string(e.code()))}, {"detail", e.detail()}};
  if (std::isfinite(e.residual())) {
    j["residual"] = e.residual();
  } else {
    j["residual"] = nullptr;
  }
  return j;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::SchemaError, "cannot write '" + path + "'");
  out << text;
}

}  // namespace symdisc::io

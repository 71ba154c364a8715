#include "symdisc/factor.hpp"

#include <algorithm>

#include "symdisc/error.hpp"
#include "symdisc/linalg.hpp"

namespace symdisc {
namespace {

ComplexMatrix checked_inverse(const ComplexMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw Error(ErrorCode::NotInvertible, std::string(what) + " is not square");
  }
  try {
    return linalg::inverse(a);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular) {
      throw Error(ErrorCode::NotInvertible, std::string(what) + " is singular", e.residual());
    }
    throw;
  }
}

Colligation assemble(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                     const ComplexMatrix& d, const ComplexMatrix& tau) {
  Colligation out{tau, a, b, c, d};
  out.validate();
  return out;
}

void require_same(const ComplexMatrix& m, std::size_t r, std::size_t c, const char* what) {
  if (m.rows() != r || m.cols() != c) {
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + " has shape " +
                                              std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + ", expected " +
                                              std::to_string(r) + "x" + std::to_string(c));
  }
}

void enforce(const FactorReport& rep, double tol) {
  for (const auto& c : rep.residuals) {
    if (c.residual > tol) throw Error(ErrorCode::ConditionViolated, c.name, c.residual);
  }
}

}  // namespace

void StructuredColligation::validate() const {
  V.validate();
  if (h1 + h2 != V.h()) {
    throw Error(ErrorCode::ShapeMismatch, "h1 + h2 differs from the state dimension");
  }
  const ComplexMatrix lower = V.D.block(h1, 0, h2, h1);
  for (const auto& z : lower.data())
    if (z != Complex{}) throw Error(ErrorCode::ConditionViolated, "lower-left D block is nonzero", max_abs(lower));
  const double off = std::max(max_abs(V.tau.block(0, h1, h1, h2)), max_abs(V.tau.block(h1, 0, h2, h1)));
  if (off > 1e-12) throw Error(ErrorCode::ConditionViolated, "tau does not preserve the split", off);
}

StructuredColligation compose_colligations(const Colligation& v1, const Colligation& v2,
                                           double tol) {
  v1.validate();
  v2.validate();
  if (v1.N() != v2.M()) {
    throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ: " + std::to_string(v1.N()) +
                                              " vs " + std::to_string(v2.M()));
  }
  for (const Colligation* v : {&v1, &v2}) {
    const double r = isometry_residual(v->block());
    if (r > tol) throw Error(ErrorCode::NotIsometric, "factor colligation is not isometric", r);
  }
  const std::size_t m = v1.M(), n = v2.N(), h1 = v1.h(), h2 = v2.h();
  StructuredColligation out;
  out.h1 = h1;
  out.h2 = h2;
  Colligation& v = out.V;
  v.tau = block_diag(v1.tau, v2.tau);
  v.A = v1.A * v2.A;
  v.B = ComplexMatrix(m, h1 + h2);
  v.B.set_block(0, 0, v1.B);
  v.B.set_block(0, h1, v1.A * v2.B);
  v.C = ComplexMatrix(h1 + h2, n);
  v.C.set_block(0, 0, v1.C * v2.A);
  v.C.set_block(h1, 0, v2.C);
  v.D = ComplexMatrix(h1 + h2, h1 + h2);
  v.D.set_block(0, 0, v1.D);
  v.D.set_block(0, h1, v1.C * v2.B);
  v.D.set_block(h1, h1, v2.D);
  return out;
}

FactorVariant parse_variant(const std::string& name) {
  if (name == "invertible") return FactorVariant::Invertible;
  if (name == "zero-selfadjoint") return FactorVariant::ZeroSelfadjoint;
  if (name == "zero-zero") return FactorVariant::ZeroZero;
  throw Error(ErrorCode::SchemaError, "unknown factor variant '" + name + "'");
}

std::string to_string(FactorVariant v) {
  switch (v) {
    case FactorVariant::Invertible: return "invertible";
    case FactorVariant::ZeroSelfadjoint: return "zero-selfadjoint";
    case FactorVariant::ZeroZero: return "zero-zero";
  }
  return "invertible";
}

double FactorReport::max() const {
  double m = 0.0;
  for (const auto& c : residuals) m = std::max(m, c.residual);
  return m;
}

FactorReport check_factor_conditions(const StructuredColligation& v, FactorVariant variant,
                                     const FactorAux& aux) {
  v.validate();
  const ComplexMatrix& a = v.V.A;
  const ComplexMatrix c1 = v.C1(), b2 = v.B2(), d1 = v.D1(), d2 = v.D2();
  FactorReport rep;
  auto add = [&](const char* name, double r) { rep.residuals.push_back({name, r}); };

  switch (variant) {
    case FactorVariant::Invertible: {
      const ComplexMatrix a_inv = checked_inverse(a, "A");
      ComplexMatrix a1 = aux.A1, a2 = aux.A2;
      if (a2.empty()) a2 = linalg::psd_sqrt(adjoint_times(a, a) + adjoint_times(c1, c1));
      if (a1.empty()) a1 = a * checked_inverse(a2, "A2");
      require_same(a2, a.cols(), a.cols(), "A2");
      require_same(a1, a.rows(), a.cols(), "A1");
      add("D2 = C1 A^-1 B2", max_abs_diff(d2, c1 * (a_inv * b2)));
      add("A = A1 A2", max_abs_diff(a, a1 * a2));
      add("A2^H A2 = A^H A + C1^H C1",
          max_abs_diff(adjoint_times(a2, a2), adjoint_times(a, a) + adjoint_times(c1, c1)));
      break;
    }
    case FactorVariant::ZeroSelfadjoint: {
      ComplexMatrix s = aux.A;
      if (s.empty()) s = linalg::psd_sqrt(adjoint_times(c1, c1));
      require_same(s, c1.cols(), c1.cols(), "A");
      const ComplexMatrix s_inv = checked_inverse(s, "A");
      add("C1^H C1 = A^2", max_abs_diff(adjoint_times(c1, c1), s * s));
      add("C1 A^-2 C1^H D2 = D2", max_abs_diff(c1 * (s_inv * s_inv) * adjoint_times(c1, d2), d2));
      add("A selfadjoint", max_abs_diff(s, s.adjoint()));
      add("theta(0,0) = 0", max_abs(a));
      add("B2 = 0", max_abs(b2));
      break;
    }
    case FactorVariant::ZeroZero: {
      if (aux.X.empty() && v.h1 > 0) throw Error(ErrorCode::ShapeMismatch, "zero-zero needs X");
      if (aux.X.rows() != v.h1) throw Error(ErrorCode::ShapeMismatch, "X must have h1 rows");
      require_same(aux.Y, aux.X.cols(), v.h2, "Y");
      add("D2 = X Y", max_abs_diff(d2, aux.X * aux.Y));
      add("X^H D1 = 0", max_abs(adjoint_times(aux.X, d1)));
      add("theta(0,0) = 0", max_abs(a));
      add("C1 = 0", max_abs(c1));
      add("B2 = 0", max_abs(b2));
      break;
    }
  }
  return rep;
}

std::pair<Colligation, Colligation> split_invertible(const StructuredColligation& v, double tol) {
  v.validate();
  const ComplexMatrix& a = v.V.A;
  const ComplexMatrix c1 = v.C1();
  checked_inverse(a, "A");
  const ComplexMatrix a2 = linalg::psd_sqrt(adjoint_times(a, a) + adjoint_times(c1, c1));
  const ComplexMatrix a2_inv = checked_inverse(a2, "A2");
  const ComplexMatrix a1 = a * a2_inv;
  enforce(check_factor_conditions(v, FactorVariant::Invertible, {a1, a2, {}, {}, {}}), tol);
  const ComplexMatrix a1_inv = checked_inverse(a1, "A1");
  Colligation v1 = assemble(a1, v.B1(), c1 * a2_inv, v.D1(), v.tau1());
  Colligation v2 = assemble(a2, a1_inv * v.B2(), v.C2(), v.D3(), v.tau2());
  return {std::move(v1), std::move(v2)};
}

std::pair<Colligation, Colligation> split_zero_selfadjoint(const StructuredColligation& v,
                                                           double tol) {
  v.validate();
  const ComplexMatrix c1 = v.C1();
  const ComplexMatrix s = linalg::psd_sqrt(adjoint_times(c1, c1));
  const ComplexMatrix s_inv = checked_inverse(s, "(C1^H C1)^(1/2)");
  enforce(check_factor_conditions(v, FactorVariant::ZeroSelfadjoint, {{}, {}, s, {}, {}}), tol);
  const std::size_t m = v.V.M(), k = s.rows();
  Colligation v1 = assemble(ComplexMatrix(m, k), v.B1(), c1 * s_inv, v.D1(), v.tau1());
  Colligation v2 = assemble(s, s_inv * adjoint_times(c1, v.D2()), v.C2(), v.D3(), v.tau2());
  return {std::move(v1), std::move(v2)};
}

std::pair<Colligation, Colligation> split_zero_zero(const StructuredColligation& v,
                                                    const ComplexMatrix& x,
                                                    const ComplexMatrix& y, double tol) {
  v.validate();
  enforce(check_factor_conditions(v, FactorVariant::ZeroZero, {{}, {}, {}, x, y}), tol);
  const std::size_t m = v.V.M(), n = v.V.N(), k = x.cols();
  Colligation v1 = assemble(ComplexMatrix(m, k), v.B1(), x, v.D1(), v.tau1());
  Colligation v2 = assemble(ComplexMatrix(k, n), y, v.C2(), v.D3(), v.tau2());
  return {std::move(v1), std::move(v2)};
}

}  // namespace symdisc

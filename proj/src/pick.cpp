#include "symdisc/pick.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "symdisc/error.hpp"
#include "symdisc/linalg.hpp"
#include "symdisc/rif.hpp"
#include "symdisc/rng.hpp"

namespace symdisc {
namespace {

using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

constexpr double kDistinctTol = 1e-12;
constexpr double kDiagonalTol = 1e-12;

CMat to_eigen(const ComplexMatrix& m) {
  CMat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

ComplexMatrix from_eigen(const CMat& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

// Entrywise data of the affine Agler set c1 .* G1 + c2 .* G2 = R.
struct AglerSystem {
  Eigen::Index n = 0;
  CMat c1, c2, r;
  RMat den;  // |c1|^2 + |c2|^2
  double scale = 1.0;

  AglerSystem(const PickProblem& problem, const std::vector<LiftedPoint>& pts) {
    const std::size_t nn = problem.N();
    n = static_cast<Eigen::Index>(pts.size() * nn);
    c1.resize(n, n);
    c2.resize(n, n);
    r.resize(n, n);
    den.resize(n, n);
    for (std::size_t a = 0; a < pts.size(); ++a) {
      const ComplexMatrix& ta = problem.targets[pts[a].node];
      for (std::size_t b = 0; b < pts.size(); ++b) {
        const ComplexMatrix& tb = problem.targets[pts[b].node];
        const Complex k1 = 1.0 - std::conj(pts[a].z1) * pts[b].z1;
        const Complex k2 = 1.0 - std::conj(pts[a].z2) * pts[b].z2;
        const ComplexMatrix rhs = ComplexMatrix::identity(nn) - adjoint_times(ta, tb);
        for (std::size_t i = 0; i < nn; ++i)
          for (std::size_t j = 0; j < nn; ++j) {
            const auto u = static_cast<Eigen::Index>(a * nn + i);
            const auto v = static_cast<Eigen::Index>(b * nn + j);
            c1(u, v) = k1;
            c2(u, v) = k2;
            r(u, v) = rhs(i, j);
            den(u, v) = std::norm(k1) + std::norm(k2);
          }
      }
    }
    scale = std::max(1.0, r.cwiseAbs().maxCoeff());
  }

  CMat defect(const CMat& g1, const CMat& g2) const {
    return c1.cwiseProduct(g1) + c2.cwiseProduct(g2) - r;
  }

  double residual(const CMat& g1, const CMat& g2) const {
    if (n == 0) return 0.0;
    return defect(g1, g2).cwiseAbs().maxCoeff();
  }

  void project(CMat& g1, CMat& g2) const {
    const CMat e = defect(g1, g2).cwiseQuotient(den.cast<Complex>());
    g1 -= c1.conjugate().cwiseProduct(e);
    g2 -= c2.conjugate().cwiseProduct(e);
  }
};

CMat psd_clamp(const CMat& g) {
  const CMat herm = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(herm);
  const RVec lam = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

// Top-r Gram factor of a Hermitian matrix, r x n. Directions with no weight
// get a small deterministic seed so the Jacobian does not vanish there.
CMat low_rank_factor(const CMat& g, Eigen::Index r, Rng& rng) {
  const Eigen::Index n = g.rows();
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (g + g.adjoint()));
  CMat f(r, n);
  for (Eigen::Index k = 0; k < r; ++k) {
    const Eigen::Index idx = n - 1 - k;
    const double lam = es.eigenvalues()(idx);
    if (lam > 1e-12) {
      f.row(k) = std::sqrt(lam) * es.eigenvectors().col(idx).adjoint();
    } else {
      for (Eigen::Index j = 0; j < n; ++j) f(k, j) = 1e-6 * rng.complex_normal();
    }
  }
  return f;
}

// Levenberg-Marquardt on G_j = F_j^H F_j over the upper triangle of the
// Agler identity. Unknowns are real and imaginary parts of F1, F2.
class GramPolish {
 public:
  GramPolish(const AglerSystem& sys, double target) : sys_(sys), target_(target) {
    const Eigen::Index n = sys.n;
    for (Eigen::Index u = 0; u < n; ++u)
      for (Eigen::Index v = u; v < n; ++v) {
        rows_.push_back({u, v, false});
        if (u != v) rows_.push_back({u, v, true});
      }
  }

  // Returns true and overwrites f1, f2 when the target is met.
  bool run(CMat& f1, CMat& f2, int max_iters = 100) const {
    const Eigen::Index r = f1.rows();
    const Eigen::Index n = sys_.n;
    const Eigen::Index unknowns = 4 * r * n;
    const auto m = static_cast<Eigen::Index>(rows_.size());
    RVec theta = pack(f1, f2);
    RVec e = residuals(theta, r);
    double cost = e.squaredNorm();
    double mu = -1.0;
    int slow = 0;
    RMat jac(m, unknowns);
    for (int it = 0; it < max_iters; ++it) {
      if (e.cwiseAbs().maxCoeff() <= target_) {
        unpack(theta, r, f1, f2);
        return true;
      }
      jacobian(theta, r, jac);
      const bool normal = unknowns <= m;
      RMat gram = normal ? RMat(jac.transpose() * jac) : RMat(jac * jac.transpose());
      if (mu < 0.0) mu = 1e-8 * std::max(1e-30, gram.diagonal().maxCoeff());
      bool accepted = false;
      for (int attempt = 0; attempt < 10 && !accepted; ++attempt) {
        RMat lhs = gram;
        lhs.diagonal().array() += mu;
        Eigen::LLT<RMat> llt(lhs);
        if (llt.info() != Eigen::Success) {
          mu *= 10.0;
          continue;
        }
        const RVec step = normal ? RVec(-llt.solve(jac.transpose() * e))
                                 : RVec(-(jac.transpose() * llt.solve(e)));
        const RVec trial = theta + step;
        const RVec et = residuals(trial, r);
        const double ct = et.squaredNorm();
        if (ct < cost) {
          slow = ct > 0.81 * cost ? slow + 1 : 0;
          theta = trial;
          e = et;
          cost = ct;
          mu = std::max(mu / 5.0, 1e-300);
          accepted = true;
        } else {
          mu *= 8.0;
        }
      }
      if (!accepted || slow >= 5) break;
    }
    if (e.cwiseAbs().maxCoeff() <= target_) {
      unpack(theta, r, f1, f2);
      return true;
    }
    return false;
  }

 private:
  struct Row {
    Eigen::Index u, v;
    bool imag;
  };

  static RVec pack(const CMat& f1, const CMat& f2) {
    const Eigen::Index n = f1.cols();
    const Eigen::Index sz = f1.size();
    RVec theta(4 * sz);
    for (Eigen::Index i = 0; i < f1.rows(); ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index k = i * n + j;
        theta(k) = f1(i, j).real();
        theta(sz + k) = f1(i, j).imag();
        theta(2 * sz + k) = f2(i, j).real();
        theta(3 * sz + k) = f2(i, j).imag();
      }
    return theta;
  }

  // Layout: [Re F1, Im F1, Re F2, Im F2], each block row-major r x n.
  void unpack(const RVec& theta, Eigen::Index r, CMat& f1, CMat& f2) const {
    const Eigen::Index n = sys_.n;
    const Eigen::Index sz = r * n;
    f1.resize(r, n);
    f2.resize(r, n);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index k = i * n + j;
        f1(i, j) = {theta(k), theta(sz + k)};
        f2(i, j) = {theta(2 * sz + k), theta(3 * sz + k)};
      }
  }

  RVec residuals(const RVec& theta, Eigen::Index r) const {
    CMat f1, f2;
    unpack(theta, r, f1, f2);
    const CMat d = sys_.defect(f1.adjoint() * f1, f2.adjoint() * f2);
    RVec e(static_cast<Eigen::Index>(rows_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Complex z = d(rows_[i].u, rows_[i].v);
      e(static_cast<Eigen::Index>(i)) = rows_[i].imag ? z.imag() : z.real();
    }
    return e;
  }

  void jacobian(const RVec& theta, Eigen::Index r, RMat& jac) const {
    CMat f[2];
    unpack(theta, r, f[0], f[1]);
    const Eigen::Index n = sys_.n;
    const Eigen::Index sz = r * n;
    jac.setZero();
    for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
      const Row& row = rows_[ri];
      const auto out = static_cast<Eigen::Index>(ri);
      for (int j = 0; j < 2; ++j) {
        const Complex c = j == 0 ? sys_.c1(row.u, row.v) : sys_.c2(row.u, row.v);
        const Eigen::Index re0 = 2 * j * sz;
        const Eigen::Index im0 = re0 + sz;
        for (Eigen::Index k = 0; k < r; ++k) {
          // d G(u,v) / d F[k,u] and / d F[k,v]
          const Complex fv = f[j](k, row.v);
          const Complex fu = std::conj(f[j](k, row.u));
          const Complex d_re_u = c * fv;
          const Complex d_im_u = c * Complex(0.0, -1.0) * fv;
          const Complex d_re_v = c * fu;
          const Complex d_im_v = c * Complex(0.0, 1.0) * fu;
          auto pick = [&](Complex z) { return row.imag ? z.imag() : z.real(); };
          jac(out, re0 + k * n + row.u) += pick(d_re_u);
          jac(out, im0 + k * n + row.u) += pick(d_im_u);
          jac(out, re0 + k * n + row.v) += pick(d_re_v);
          jac(out, im0 + k * n + row.v) += pick(d_im_v);
        }
      }
    }
  }

  const AglerSystem& sys_;
  double target_;
  std::vector<Row> rows_;
};

// Permutation of the block index induced by sigma on lifted points.
CMat sigma_conjugate(const CMat& g, const std::vector<LiftedPoint>& pts, std::size_t nn) {
  CMat out(g.rows(), g.cols());
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b)
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
          out(static_cast<Eigen::Index>(a * nn + i), static_cast<Eigen::Index>(b * nn + j)) =
              g(static_cast<Eigen::Index>(pts[a].sigma * nn + i),
                static_cast<Eigen::Index>(pts[b].sigma * nn + j));
  return out;
}

}  // namespace

void PickProblem::validate() const {
  if (nodes.empty()) throw Error(ErrorCode::DimensionError, "problem has no nodes");
  if (nodes.size() != targets.size()) {
    throw Error(ErrorCode::DimensionError, "node and target counts differ");
  }
  const std::size_t m = M(), n = N();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].size() != 2) throw Error(ErrorCode::DimensionError, "nodes must be (s, p)");
    if (!in_Gd(nodes[i], 1e-12)) {
      throw Error(ErrorCode::DomainError, "node " + std::to_string(i) + " is not in G");
    }
    if (targets[i].rows() != m || targets[i].cols() != n) {
      throw Error(ErrorCode::ShapeMismatch, "target " + std::to_string(i) + " has a different shape");
    }
    const double norm = linalg::operator_norm(targets[i]);
    if (norm > 1.0 + 1e-12) {
      throw Error(ErrorCode::NotContraction, "target " + std::to_string(i) + " has norm > 1", norm);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(nodes[i][0] - nodes[j][0]) <= kDistinctTol &&
          std::abs(nodes[i][1] - nodes[j][1]) <= kDistinctTol) {
        throw Error(ErrorCode::DomainError,
                    "nodes " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
      }
    }
  }
}

LiftedNode lift_node(Complex s, Complex p) {
  if (!in_Gd({s, p}, 1e-12)) throw Error(ErrorCode::DomainError, "node is not in G");
  if (std::abs(s * s - 4.0 * p) <= kDiagonalTol) return {0.5 * s, 0.5 * s, true};
  const std::vector<Complex> roots = linalg::monic_roots({p, -s});
  Complex a = roots[0], b = roots[1];
  if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag())) std::swap(a, b);
  return {a, b, false};
}

std::size_t AglerCert::primary_point(std::size_t node) const {
  for (std::size_t a = 0; a < points.size(); ++a)
    if (points[a].node == node) return a;
  throw Error(ErrorCode::DimensionError, "node has no lifted point");
}

std::vector<LiftedPoint> lift_problem(const PickProblem& problem) {
  std::vector<LiftedPoint> pts;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const LiftedNode l = lift_node(problem.nodes[i][0], problem.nodes[i][1]);
    const std::size_t a = pts.size();
    if (l.diagonal) {
      pts.push_back({l.z1, l.z2, i, a});
    } else {
      pts.push_back({l.z1, l.z2, i, a + 1});
      pts.push_back({l.z2, l.z1, i, a});
    }
  }
  return pts;
}

double agler_residual(const PickProblem& problem, const std::vector<LiftedPoint>& points,
                      const ComplexMatrix& gamma1, const ComplexMatrix& gamma2) {
  const AglerSystem sys(problem, points);
  return sys.residual(to_eigen(gamma1), to_eigen(gamma2));
}

AglerCert solve_agler_feasibility(const PickProblem& problem, const PickOptions& opts) {
  problem.validate();
  AglerCert cert;
  cert.points = lift_problem(problem);
  cert.N = problem.N();
  const AglerSystem sys(problem, cert.points);
  const Eigen::Index n = sys.n;
  const double polish_target = 1e-13 * sys.scale;

  CMat g1 = CMat::Zero(n, n), g2 = CMat::Zero(n, n);
  CMat q1 = CMat::Zero(n, n), q2 = CMat::Zero(n, n);
  sys.project(g1, g2);
  g1 = psd_clamp(g1);
  g2 = psd_clamp(g2);
  double res = sys.residual(g1, g2);

  CMat best1 = g1, best2 = g2;
  double best = res;
  const GramPolish polish(sys, polish_target);
  Rng rng(0x5eed);
  constexpr std::size_t kChunk = 100;
  std::size_t iters = 0, chunks = 0, next_polish = 1;
  bool polished = false;

  while (best > polish_target && iters < opts.max_iters) {
    const std::size_t stop = std::min(opts.max_iters, iters + kChunk);
    for (; iters < stop; ++iters) {
      CMat y1 = g1, y2 = g2;
      sys.project(y1, y2);
      const CMat z1 = psd_clamp(y1 + q1);
      const CMat z2 = psd_clamp(y2 + q2);
      q1 += y1 - z1;
      q2 += y2 - z2;
      g1 = z1;
      g2 = z2;
      res = sys.residual(g1, g2);
      if (res < best) {
        best = res;
        best1 = g1;
        best2 = g2;
      }
      if (res <= polish_target) break;
    }
    ++chunks;
    if (best <= polish_target) break;
    if (chunks == next_polish || iters >= opts.max_iters) {
      next_polish *= 2;
      for (Eigen::Index r = 1; r <= n; ++r) {
        CMat f1 = low_rank_factor(g1, r, rng);
        CMat f2 = low_rank_factor(g2, r, rng);
        if (polish.run(f1, f2)) {
          best1 = f1.adjoint() * f1;
          best2 = f2.adjoint() * f2;
          best = sys.residual(best1, best2);
          polished = true;
          break;
        }
      }
      if (polished) break;
    }
  }
  cert.iterations = iters;

  if (best > opts.tol) {
    throw Error(ErrorCode::Infeasible, "Agler decomposition not found within " +
                                           std::to_string(opts.max_iters) + " iterations",
                best);
  }

  // (G1, G2) -> (P G2 P, P G1 P) maps the affine set to itself; average.
  const CMat s1 = 0.5 * (best1 + sigma_conjugate(best2, cert.points, cert.N));
  const CMat s2 = 0.5 * (best2 + sigma_conjugate(best1, cert.points, cert.N));
  cert.F1 = linalg::gram_factor(linalg::psd_project(from_eigen(s1)), 1e-12);
  cert.F2 = linalg::gram_factor(linalg::psd_project(from_eigen(s2)), 1e-12);
  cert.gamma1 = adjoint_times(cert.F1, cert.F1);
  cert.gamma2 = adjoint_times(cert.F2, cert.F2);
  cert.residual = sys.residual(to_eigen(cert.gamma1), to_eigen(cert.gamma2));
  if (cert.residual > opts.tol) {
    throw Error(ErrorCode::Infeasible, "symmetrized decomposition exceeds tolerance",
                cert.residual);
  }
  return cert;
}

DoublySymmetricTau build_doubly_symmetric_tau(const AglerCert& cert, double gram_tol) {
  const std::size_t d1 = cert.F1.rows(), d2 = cert.F2.rows();
  const std::size_t h = d1 + d2;
  const std::size_t nn = cert.N;
  std::size_t nodes = 0;
  for (const auto& pt : cert.points) nodes = std::max(nodes, pt.node + 1);

  // Difference vectors of the non-diagonal nodes; diagonal ones vanish.
  std::vector<std::size_t> off;
  for (std::size_t i = 0; i < nodes; ++i) {
    const std::size_t a = cert.primary_point(i);
    if (cert.points[a].sigma != a) off.push_back(a);
  }
  ComplexMatrix x(h, off.size() * nn), y(h, off.size() * nn);
  for (std::size_t t = 0; t < off.size(); ++t) {
    const std::size_t a = off[t];
    const std::size_t b = cert.points[a].sigma;
    const Complex z1 = cert.points[a].z1, z2 = cert.points[a].z2;
    const ComplexMatrix f1a = cert.F1_at(a), f1b = cert.F1_at(b);
    const ComplexMatrix f2a = cert.F2_at(a), f2b = cert.F2_at(b);
    x.set_block(0, t * nn, f1a - f1b);
    x.set_block(d1, t * nn, f2b - f2a);
    y.set_block(0, t * nn, z1 * f1a - z2 * f1b);
    y.set_block(d1, t * nn, z1 * f2b - z2 * f2a);
  }
  const ComplexMatrix tau_star = linalg::extend_isometry(x, y, gram_tol, 1e-9);

  DoublySymmetricTau out;
  out.tau = tau_star.adjoint();
  const ComplexMatrix eye = ComplexMatrix::identity(h);
  for (std::size_t i = 0; i < nodes; ++i) {
    const std::size_t a = cert.primary_point(i);
    const std::size_t b = cert.points[a].sigma;
    const Complex z1 = cert.points[a].z1, z2 = cert.points[a].z2;
    const ComplexMatrix stacked = vstack(cert.F1_at(a), cert.F2_at(b));
    const ComplexMatrix fp = linalg::solve(tau_star - z2 * eye, stacked);
    out.F.push_back((eye - (0.5 * (z1 + z2)) * out.tau) * fp);
  }
  return out;
}

Colligation lurking_isometry(const PickProblem& problem, const ComplexMatrix& tau,
                             const std::vector<ComplexMatrix>& F, double gram_tol) {
  const std::size_t m = problem.M(), n = problem.N(), h = tau.rows();
  if (m < n) throw Error(ErrorCode::DimensionError, "lurking isometry needs M >= N");
  if (F.size() != problem.size()) throw Error(ErrorCode::DimensionError, "one F per node");
  ComplexMatrix x(n + h, problem.size() * n), y(m + h, problem.size() * n);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const ComplexMatrix f = phi(tau, problem.nodes[i][0], problem.nodes[i][1]);
    x.set_block(0, i * n, ComplexMatrix::identity(n));
    x.set_block(n, i * n, f * F[i]);
    y.set_block(0, i * n, problem.targets[i]);
    y.set_block(m, i * n, F[i]);
  }
  const ComplexMatrix v = linalg::extend_isometry(x, y, gram_tol, 1e-9);
  return Colligation::from_block(v, tau, m, n);
}

PickProblem adjoint_problem(const PickProblem& problem) {
  PickProblem out;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    out.nodes.push_back({std::conj(problem.nodes[i][0]), std::conj(problem.nodes[i][1])});
    out.targets.push_back(problem.targets[i].adjoint());
  }
  return out;
}

PickSolution solve_pick_detailed(const PickProblem& problem, const PickOptions& opts) {
  problem.validate();
  PickSolution sol;
  sol.coisometric = problem.N() > problem.M();
  const PickProblem work = sol.coisometric ? adjoint_problem(problem) : problem;
  sol.cert = solve_agler_feasibility(work, opts);
  sol.tau = build_doubly_symmetric_tau(sol.cert, opts.gram_tol);
  const Colligation v = lurking_isometry(work, sol.tau.tau, sol.tau.F, opts.gram_tol);
  sol.colligation = sol.coisometric ? adjoint_tfr(v) : v;
  sol.interpolation_residual = interpolation_residual(problem, sol.colligation);
  if (sol.interpolation_residual > opts.interp_tol) {
    throw Error(ErrorCode::InterpolationResidual, "interpolant misses the targets",
                sol.interpolation_residual);
  }
  return sol;
}

Colligation solve_pick(const PickProblem& problem, const PickOptions& opts) {
  return solve_pick_detailed(problem, opts).colligation;
}

double interpolation_residual(const PickProblem& problem, const Colligation& v) {
  double r = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    r = std::max(r, max_abs_diff(eval_tfr(v, problem.nodes[i][0], problem.nodes[i][1]),
                                 problem.targets[i]));
  }
  return r;
}

double condition_solv_residual(const PickProblem& problem, const ComplexMatrix& tau,
                               const std::vector<ComplexMatrix>& F) {
  const std::size_t n = problem.N();
  std::vector<ComplexMatrix> pf;
  for (std::size_t i = 0; i < problem.size(); ++i)
    pf.push_back(phi(tau, problem.nodes[i][0], problem.nodes[i][1]) * F[i]);
  double r = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i)
    for (std::size_t j = 0; j < problem.size(); ++j) {
      const ComplexMatrix lhs = ComplexMatrix::identity(n) + adjoint_times(pf[i], pf[j]);
      const ComplexMatrix rhs = adjoint_times(problem.targets[i], problem.targets[j]) +
                                adjoint_times(F[i], F[j]);
      r = std::max(r, max_abs_diff(lhs, rhs));
    }
  return r;
}

double boundary_inner_residual(const Colligation& v, bool coisometric, std::size_t count,
                               std::uint64_t seed, double max_condition) {
  double r = 0.0;
  for (const GdPoint& w : sample_bGd(2, count, seed)) {
    ComplexMatrix psi;
    try {
      psi = eval_tfr(v, w[0], w[1], max_condition);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Singular) continue;
      throw;
    }
    const double d = coisometric ? coisometry_residual(psi) : isometry_residual(psi);
    r = std::max(r, d);
  }
  return r;
}

double double_symmetry_residual(const AglerCert& cert) {
  const CMat g1 = to_eigen(cert.gamma1), g2 = to_eigen(cert.gamma2);
  if (g1.size() == 0) return 0.0;
  return (sigma_conjugate(g1, cert.points, cert.N) - g2).cwiseAbs().maxCoeff();
}

}  // namespace symdisc

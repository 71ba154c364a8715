// symdisc: command-line front end over the library. All payloads are JSON;
// domain failures exit with status 2 and an error object on stdout.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symdisc/approx.hpp"
#include "symdisc/error.hpp"
#include "symdisc/factor.hpp"
#include "symdisc/json_io.hpp"
#include "symdisc/pick.hpp"
#include "symdisc/realization.hpp"
#include "symdisc/rif.hpp"
#include "symdisc/sympoly.hpp"

using namespace symdisc;
using io::Json;

namespace {

struct RunConfig {
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  std::size_t max_iters = 50000;
  double radius = 0.7;
  unsigned threads = 1;
  std::string output = "-";

  // subcommand inputs
  std::string xi, f, poly, colligation, problem, target, v, v1, v2, x, y;
  std::string variant = "invertible";
  std::string at, n_vec, tau = "1,0";
  int k = 0;
  std::size_t stages = 4, nodes_per_stage = 2, grid = 100;
};

std::vector<double> parse_numbers(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::SchemaError, std::string(what) + ": cannot parse '" + item + "'");
    }
  }
  return out;
}

GdPoint parse_point(const std::string& text) {
  const std::vector<double> v = parse_numbers(text, "--at");
  if (v.empty() || v.size() % 2 != 0) {
    throw Error(ErrorCode::SchemaError, "--at expects re,im pairs");
  }
  GdPoint w;
  for (std::size_t i = 0; i < v.size(); i += 2) w.emplace_back(v[i], v[i + 1]);
  return w;
}

Json residual_object(const FactorReport& rep) {
  Json r = Json::object();
  for (const auto& c : rep.residuals) r[c.name] = c.residual;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded analytic functions on the symmetrized bidisc and polydisc"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--tol", cfg.tol, "Tolerance (command-specific default)");
  app.add_option("--seed", cfg.seed, "Seed for all sampling");
  app.add_option("--samples", cfg.samples, "Sample count (command-specific default)");
  app.add_option("--max-iters", cfg.max_iters, "Iteration budget of the feasibility solver");
  app.add_option("--radius", cfg.radius, "Grid radius for approximation runs");
  app.add_option("--threads", cfg.threads, "Worker threads for sampling reductions");
  app.add_option("-o,--output", cfg.output, "Output path ('-' for stdout)");

  auto group = [&](const char* name, const char* desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };

  Json result;
  std::function<void()> action;
  auto leaf = [&](CLI::App* g, const char* name, const char* desc, std::function<void()> fn) {
    CLI::App* s = g->add_subcommand(name, desc);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  // rif
  CLI::App* rif = group("rif", "Rational inner functions on G_d");
  auto* rif_build = leaf(rif, "build", "Construct f = tau reflect_G(xi, k) / xi", [&] {
    const MultiPoly xi = io::poly_from_json(io::read_file(cfg.xi));
    const std::vector<double> t = parse_numbers(cfg.tau, "--tau");
    if (t.size() != 2) throw Error(ErrorCode::SchemaError, "--tau expects re,im");
    result = io::to_json(build_rif(xi, cfg.k, {t[0], t[1]}, cfg.samples.value_or(10000), cfg.seed));
  });
  rif_build->add_option("--xi", cfg.xi, "Denominator polynomial")->required();
  rif_build->add_option("--k", cfg.k, "Reflection degree")->required();
  rif_build->add_option("--tau", cfg.tau, "Unimodular constant re,im");

  auto* rif_check = leaf(rif, "check", "Max boundary deviation from modulus 1", [&] {
    const RationalInnerFn f = io::rif_from_json(io::read_file(cfg.f));
    result = Json{{"max_deviation",
                   check_inner(f, cfg.samples.value_or(1000), cfg.seed, cfg.threads)}};
  });
  rif_check->add_option("--f", cfg.f, "Rational inner function")->required();

  auto* rif_eval = leaf(rif, "eval", "Evaluate at a point of G_d", [&] {
    const RationalInnerFn f = io::rif_from_json(io::read_file(cfg.f));
    const GdPoint w = parse_point(cfg.at);
    if (w.size() != f.d) throw Error(ErrorCode::DimensionError, "--at has the wrong dimension");
    result = Json{{"value", io::to_json(eval_rif(f, w))}};
  });
  rif_eval->add_option("--f", cfg.f, "Rational inner function")->required();
  rif_eval->add_option("--at", cfg.at, "s1_re,s1_im,...,p_re,p_im")->required();

  // poly
  CLI::App* poly = group("poly", "Polynomial reflections and symmetric rewriting");
  auto* poly_reflect = leaf(poly, "reflect", "z^n conj(f(1/conj z))", [&] {
    const MultiPoly f = io::poly_from_json(io::read_file(cfg.poly));
    Exponent n;
    for (double e : parse_numbers(cfg.n_vec, "--n")) {
      if (e < 0 || e != std::floor(e)) throw Error(ErrorCode::SchemaError, "--n expects nonnegative integers");
      n.push_back(static_cast<int>(e));
    }
    result = io::to_json(reflect_polydisc(f, n));
  });
  poly_reflect->add_option("--poly", cfg.poly, "Polynomial")->required();
  poly_reflect->add_option("--n", cfg.n_vec, "Degree vector n1,...,nd")->required();

  auto* poly_reflect_g = leaf(poly, "reflect-g", "p^k conj(xi(...)) on G_d", [&] {
    result = io::to_json(reflect_G(io::poly_from_json(io::read_file(cfg.poly)), cfg.k));
  });
  poly_reflect_g->add_option("--poly", cfg.poly, "Polynomial in (s_1, ..., p)")->required();
  poly_reflect_g->add_option("--k", cfg.k, "Reflection degree")->required();

  auto* poly_sym = leaf(poly, "sym2elem", "Rewrite a symmetric polynomial in (s, p)", [&] {
    result = io::to_json(
        symmetric_to_elementary(io::poly_from_json(io::read_file(cfg.poly)), cfg.tol.value_or(1e-10)));
  });
  poly_sym->add_option("--poly", cfg.poly, "Symmetric polynomial")->required();

  // tfr
  CLI::App* tfr = group("tfr", "Transfer-function realizations on G");
  auto load_colligation = [&] { return io::colligation_from_json(io::read_file(cfg.colligation)); };
  auto* tfr_eval = leaf(tfr, "eval", "Evaluate the transfer function", [&] {
    const GdPoint w = parse_point(cfg.at);
    if (w.size() != 2) throw Error(ErrorCode::DimensionError, "--at expects s_re,s_im,p_re,p_im");
    result = io::to_json(eval_tfr(load_colligation(), w[0], w[1]));
  });
  tfr_eval->add_option("--colligation", cfg.colligation, "Colligation")->required();
  tfr_eval->add_option("--at", cfg.at, "s_re,s_im,p_re,p_im")->required();

  auto* tfr_check = leaf(tfr, "check", "Isometry, co-isometry and tau residuals", [&] {
    const ColligationReport r = check_colligation(load_colligation());
    result = Json{{"isometry_residual", r.isometry_residual},
                  {"coisometry_residual", r.coisometry_residual},
                  {"tau_residual", r.tau_residual}};
  });
  tfr_check->add_option("--colligation", cfg.colligation, "Colligation")->required();

  auto* tfr_adjoint = leaf(tfr, "adjoint", "Colligation of Psi(conj s, conj p)^H", [&] {
    result = io::to_json(adjoint_tfr(load_colligation()));
  });
  tfr_adjoint->add_option("--colligation", cfg.colligation, "Colligation")->required();

  auto* tfr_embed = leaf(tfr, "embed", "Embed in a unitary colligation", [&] {
    const Embedding e = embed_in_inner(load_colligation(), cfg.tol.value_or(1e-9));
    result = Json{{"W", io::to_json(e.W)}, {"rows", e.rows}, {"cols", e.cols}};
  });
  tfr_embed->add_option("--colligation", cfg.colligation, "Contractive colligation")->required();

  // pick
  CLI::App* pick = group("pick", "Nevanlinna-Pick interpolation on G");
  auto pick_options = [&] {
    PickOptions o;
    o.max_iters = cfg.max_iters;
    o.tol = cfg.tol.value_or(1e-8);
    return o;
  };
  auto* pick_solve = leaf(pick, "solve", "Rational iso-/coiso-inner interpolant", [&] {
    const PickProblem p = io::problem_from_json(io::read_file(cfg.problem));
    result = io::to_json(solve_pick(p, pick_options()));
  });
  pick_solve->add_option("--problem", cfg.problem, "Pick problem")->required();

  auto* pick_verify = leaf(pick, "verify", "Check a colligation against a problem", [&] {
    const PickProblem p = io::problem_from_json(io::read_file(cfg.problem));
    const Colligation v = load_colligation();
    if (v.M() != p.M() || v.N() != p.N()) throw Error(ErrorCode::ShapeMismatch, "colligation and problem shapes differ");
    const bool co = p.N() > p.M();
    const ColligationReport rep = check_colligation(v);
    const double interp = interpolation_residual(p, v);
    const double iso = co ? rep.coisometry_residual : rep.isometry_residual;
    const double bnd = boundary_inner_residual(v, co, cfg.samples.value_or(200), cfg.seed);
    result = Json{{"interpolation_residual", interp},
                  {"isometry_residual", iso},
                  {"boundary_residual", bnd},
                  {"coisometric", co}};
    if (interp > 1e-6) throw Error(ErrorCode::InterpolationResidual, "targets missed", interp);
    if (iso > 1e-8) throw Error(ErrorCode::NotIsometric, "colligation is not isometric", iso);
    if (bnd > 1e-7) throw Error(ErrorCode::NotIsometric, "boundary values are not isometric", bnd);
  });
  pick_verify->add_option("--problem", cfg.problem, "Pick problem")->required();
  pick_verify->add_option("--colligation", cfg.colligation, "Candidate interpolant")->required();

  // approx
  CLI::App* approx = group("approx", "Caratheodory approximation");
  auto* approx_run = leaf(approx, "run", "Stagewise rational inner interpolants", [&] {
    ApproxOptions o;
    o.stages = cfg.stages;
    o.nodes_per_stage = cfg.nodes_per_stage;
    o.grid_size = cfg.grid;
    o.radius = cfg.radius;
    o.seed = cfg.seed;
    o.threads = cfg.threads;
    o.pick = pick_options();
    result = io::to_json(caratheodory_sequence(io::colligation_from_json(io::read_file(cfg.target)), o));
  });
  approx_run->add_option("--target", cfg.target, "Target colligation")->required();
  approx_run->add_option("--stages", cfg.stages, "Number of stages");
  approx_run->add_option("--nodes-per-stage", cfg.nodes_per_stage, "Nodes added per stage");
  approx_run->add_option("--grid", cfg.grid, "Test grid size");

  // factor
  CLI::App* factor = group("factor", "Colligation factorization");
  auto* factor_compose = leaf(factor, "compose", "Colligation of psi1 psi2", [&] {
    result = io::to_json(compose_colligations(io::colligation_from_json(io::read_file(cfg.v1)),
                                              io::colligation_from_json(io::read_file(cfg.v2)),
                                              cfg.tol.value_or(1e-8)));
  });
  factor_compose->add_option("--v1", cfg.v1, "Left factor")->required();
  factor_compose->add_option("--v2", cfg.v2, "Right factor")->required();

  auto load_xy = [&](ComplexMatrix& x, ComplexMatrix& y) {
    if (cfg.x.empty() || cfg.y.empty()) throw Error(ErrorCode::SchemaError, "zero-zero needs --x and --y");
    x = io::matrix_from_json(io::read_file(cfg.x));
    y = io::matrix_from_json(io::read_file(cfg.y));
  };
  auto* factor_split = leaf(factor, "split", "Split a structured colligation", [&] {
    const StructuredColligation v = io::structured_from_json(io::read_file(cfg.v));
    const double tol = cfg.tol.value_or(1e-8);
    std::pair<Colligation, Colligation> out;
    switch (parse_variant(cfg.variant)) {
      case FactorVariant::Invertible: out = split_invertible(v, tol); break;
      case FactorVariant::ZeroSelfadjoint: out = split_zero_selfadjoint(v, tol); break;
      case FactorVariant::ZeroZero: {
        ComplexMatrix x, y;
        load_xy(x, y);
        out = split_zero_zero(v, x, y, tol);
        break;
      }
    }
    result = Json{{"V1", io::to_json(out.first)}, {"V2", io::to_json(out.second)}};
  });
  auto* factor_check = leaf(factor, "check", "Residuals of the factorization conditions", [&] {
    const StructuredColligation v = io::structured_from_json(io::read_file(cfg.v));
    const FactorVariant variant = parse_variant(cfg.variant);
    FactorAux aux;
    if (variant == FactorVariant::ZeroZero) load_xy(aux.X, aux.Y);
    const FactorReport rep = check_factor_conditions(v, variant, aux);
    result = Json{{"variant", to_string(variant)}, {"residuals", residual_object(rep)}, {"max", rep.max()}};
  });
  for (CLI::App* s : {factor_split, factor_check}) {
    s->add_option("--v", cfg.v, "Structured colligation")->required();
    s->add_option("--variant", cfg.variant, "invertible | zero-selfadjoint | zero-zero")
        ->check(CLI::IsMember({"invertible", "zero-selfadjoint", "zero-zero"}));
    s->add_option("--x", cfg.x, "X for the zero-zero variant");
    s->add_option("--y", cfg.y, "Y for the zero-zero variant");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    action();
    io::write_file(cfg.output, result);
    return 0;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) {
      std::cerr << "symdisc: " << e.what() << "\n";
      return 1;
    }
    // Partial results (e.g. verify residuals) are not written on failure.
    std::cout << io::to_json(e).dump(2) << "\n";
    return 2;
  }
}

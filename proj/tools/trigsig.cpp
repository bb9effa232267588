// Command-line driver. Every subcommand writes JSON (semigroup also prints a table) to --out or
// stdout. Exit codes: 0 success, 1 a verification failed, 2 usage or configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "trig/verify.hpp"

using nlohmann::json;
using namespace trig;

namespace {

struct Options {
  std::string curve;
  double precision = 1e-6;
  std::uint64_t seed = 1;
  std::string out;
  std::string which = "all";
  std::string u;
  int r = 0;
  int s = 0;
};

void emit(const Options& o, const json& j) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ConfigError("cannot write " + o.out);
  f << j.dump(2) << "\n";
}

json int_list(const std::vector<int>& v) { return json(v); }

int cmd_semigroup(const Options& o) {
  const NumericalSemigroup h = build_semigroup(o.r, o.s);
  const YoungDiagram y = young_diagram(h);
  std::cout << "semigroup  <";
  for (size_t i = 0; i < h.generators.size(); ++i) std::cout << (i ? "," : "") << h.generators[i];
  std::cout << ">\ngenus      " << h.genus << "\ngaps      ";
  for (int g : h.gaps) std::cout << " " << g;
  std::cout << "\nLambda    ";
  for (int l : y.rows) std::cout << " " << l;
  std::cout << "\nalpha(L)  ";
  for (int a : y.schubert) std::cout << " " << a;
  std::cout << "\nsymmetric  " << (is_symmetric(h) ? "yes" : "no") << "\ntelescopic "
            << (is_telescopic_any_order(h.generators) ? "yes" : "no") << "\n";
  if (!o.out.empty())
    emit(o, {{"r", h.r}, {"s", h.s}, {"generators", int_list(h.generators)}, {"genus", h.genus},
             {"gaps", int_list(h.gaps)}, {"lambda", int_list(y.rows)}, {"schubert", int_list(y.schubert)},
             {"symmetric", is_symmetric(h)}, {"telescopic", is_telescopic_any_order(h.generators)}});
  return 0;
}

int cmd_curve_check(const Options& o) {
  const CurveConfig cfg = load_curve_config(o.curve);
  const CurveModel c(cfg.r, cfg.s, cfg.branch_points);
  std::mt19937_64 rng(o.seed);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t)
    for (double r : c.relation_residuals(random_point(c, rng))) worst = std::max(worst, r);
  const bool ok = worst < o.precision;
  emit(o, {{"curve", to_json(cfg)}, {"genus", c.genus()}, {"nonsingular", true},
           {"relation_residual", worst}, {"samples", 50}, {"pass", ok}});
  return ok ? 0 : 1;
}

json monomials(const std::vector<Monomial>& ms) {
  json a = json::array();
  for (const Monomial& m : ms) a.push_back({{"x", m.a}, {"y_rhat", m.e1}, {"y_shat", m.e2}, {"weight", m.weight}});
  return a;
}

int cmd_basis(const Options& o) {
  const CurveConfig cfg = load_curve_config(o.curve);
  const CurveModel c(cfg.r, cfg.s, cfg.branch_points);
  const int g = c.genus();
  const HolomorphicBasis hb = holomorphic_basis(c);
  json degrees = json::array();
  for (int i = 0; i < g; ++i) degrees.push_back(divisor_degree(holomorphic_divisor(c, i)));
  emit(o, {{"curve", to_json(cfg)},
           {"genus", g},
           {"phi", monomials(phi_basis(c, 2 * g + 2))},
           {"phi_hat", monomials(phi_hat_basis(c, 2 * g + 2))},
           {"holomorphic_numerators", monomials(hb.numerators)},
           {"g_r", hb.g_r},
           {"g_s", hb.g_s},
           {"u_weights", int_list(u_weights(c))},
           {"canonical_divisor_degrees", degrees}});
  return 0;
}

int cmd_periods(const Options& o) {
  const CurveConfig cfg = load_curve_config(o.curve);
  const FormSet f(CurveModel(cfg.r, cfg.s, cfg.branch_points));
  PeriodData pd = period_matrices(f);
  find_characteristic(f, pd, o.seed);
  const double leg = pd.legendre_residual();
  emit(o, {{"curve", to_json(cfg)},
           {"omega1", to_json(pd.omega1)},
           {"omega2", to_json(pd.omega2)},
           {"eta1", to_json(pd.eta1)},
           {"eta2", to_json(pd.eta2)},
           {"tau", to_json(pd.tau)},
           {"delta1", std::vector<double>(pd.delta1.data(), pd.delta1.data() + pd.delta1.size())},
           {"delta2", std::vector<double>(pd.delta2.data(), pd.delta2.data() + pd.delta2.size())},
           {"shift", to_json(pd.shift)},
           {"legendre_residual", leg},
           {"pass", leg < o.precision}});
  return leg < o.precision ? 0 : 1;
}

int cmd_sigma_eval(const Options& o) {
  const CurveConfig cfg = load_curve_config(o.curve);
  json uj;
  try {
    uj = json::parse(o.u);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("--u: ") + e.what());
  }
  const VecC u = parse_complex_vector(uj);
  const CurveSetup s = build_setup(cfg, o.seed);
  if (u.size() != s.forms->genus()) throw ConfigError("--u must have genus-many entries");
  const SigmaEvaluator& S = *s.sigma;
  json out{{"curve", to_json(cfg)},
           {"u", to_json(u)},
           {"sigma", to_json(S.sigma(u))},
           {"gradient", to_json(S.gradient(u))},
           {"relative_magnitude", S.relative_magnitude(u)},
           {"constant", to_json(S.constant())}};
  try {
    out["wp"] = to_json(S.wp(u));
  } catch (const std::domain_error& e) {
    out["wp"] = nullptr;
    out["wp_error"] = e.what();
  }
  emit(o, out);
  return 0;
}

int cmd_verify(const Options& o) {
  const CurveConfig cfg = load_curve_config(o.curve);
  const CurveSetup s = build_setup(cfg, o.seed);
  const auto results = run_checks(s, o.which, o.precision, o.seed);
  json arr = json::array();
  bool all = true;
  for (const CheckResult& r : results) {
    arr.push_back(to_json(r, cfg));
    all = all && r.pass;
  }
  emit(o, {{"checks", arr}, {"pass", all}, {"seed", o.seed}, {"precision", o.precision}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sigma functions of trigonal cyclic curves y^3 = k_r^2 k_s"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool curve) {
    if (curve) sub->add_option("--curve", o.curve, "curve config JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--precision", o.precision, "residual target")->check(CLI::Range(1e-12, 1e-4));
    sub->add_option("--seed", o.seed, "seed for random sampling");
    sub->add_option("--out", o.out, "write JSON here instead of stdout");
  };
  auto* sg = app.add_subcommand("semigroup", "gaps, Young diagram and flags of <3, 2r+s, r+2s>");
  sg->add_option("r", o.r)->required();
  sg->add_option("s", o.s)->required();
  common(sg, false);
  auto* cc = app.add_subcommand("curve-check", "nonsingularity and defining relations at random points");
  common(cc, true);
  auto* bs = app.add_subcommand("basis", "monomial bases, holomorphic forms and weights");
  common(bs, true);
  auto* pe = app.add_subcommand("periods", "period matrices, characteristic and Legendre residual");
  common(pe, true);
  auto* se = app.add_subcommand("sigma-eval", "sigma, its gradient and the wp matrix at u");
  common(se, true);
  se->add_option("--u", o.u, "JSON array of [re, im] pairs")->required();
  auto* ve = app.add_subcommand("verify", "run identity checks and report residuals");
  common(ve, true);
  ve->add_option("--which", o.which, "all|omega|legendre|schur|inversion|vanishing")
      ->check(CLI::IsMember({"all", "omega", "legendre", "schur", "inversion", "vanishing"}));

  CLI11_PARSE(app, argc, argv);
  try {
    if (*sg) return cmd_semigroup(o);
    if (*cc) return cmd_curve_check(o);
    if (*bs) return cmd_basis(o);
    if (*pe) return cmd_periods(o);
    if (*se) return cmd_sigma_eval(o);
    if (*ve) return cmd_verify(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

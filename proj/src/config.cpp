#include "trig/config.hpp"

#include <fstream>

namespace trig {

using nlohmann::json;

namespace {

cplx parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError("complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

CurveConfig parse_curve_config(const json& j) {
  if (!j.is_object()) throw ConfigError("curve config must be a JSON object");
  for (const char* key : {"r", "s", "branch_points"})
    if (!j.contains(key)) throw ConfigError(std::string("curve config: missing \"") + key + "\"");
  if (!j["r"].is_number_integer() || !j["s"].is_number_integer())
    throw ConfigError("curve config: r and s must be integers");
  CurveConfig c;
  c.r = j["r"].get<int>();
  c.s = j["s"].get<int>();
  if (!j["branch_points"].is_array()) throw ConfigError("curve config: branch_points must be an array");
  for (const auto& b : j["branch_points"]) c.branch_points.push_back(parse_complex(b));
  if (static_cast<int>(c.branch_points.size()) != c.r + c.s)
    throw ConfigError("curve config: need r + s branch points");
  return c;
}

CurveConfig load_curve_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return parse_curve_config(j);
}

json to_json(const CurveConfig& c) {
  json b = json::array();
  for (cplx z : c.branch_points) b.push_back(to_json(z));
  return {{"r", c.r}, {"s", c.s}, {"branch_points", b}};
}

std::vector<cplx> random_branch_points(int count, std::mt19937_64& rng, double separation) {
  // Uniform in area: r^2 uniform on [0.25, 4].
  std::uniform_real_distribution<double> R2(0.25, 4.0), A(0.0, 2.0 * kPi);
  std::vector<cplx> out;
  while (static_cast<int>(out.size()) < count) {
    const cplx z = std::polar(std::sqrt(R2(rng)), A(rng));
    bool ok = true;
    for (cplx w : out) ok = ok && std::abs(z - w) >= separation;
    if (ok) out.push_back(z);
  }
  return out;
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const VecC& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v[i]));
  return a;
}

json to_json(const MatC& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    a.push_back(row);
  }
  return a;
}

VecC parse_complex_vector(const json& j) {
  if (!j.is_array()) throw ConfigError("expected an array of [re, im] pairs");
  VecC v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = parse_complex(j[i]);
  return v;
}

CurveSetup build_setup(const CurveConfig& cfg, std::uint64_t seed) {
  CurveSetup s;
  s.forms = std::make_unique<FormSet>(CurveModel(cfg.r, cfg.s, cfg.branch_points));
  s.periods = period_matrices(*s.forms);
  find_characteristic(*s.forms, s.periods, seed);
  s.sigma = std::make_unique<SigmaEvaluator>(s.periods);
  const CurveModel& c = s.forms->curve();
  s.diagram = young_diagram(c.semigroup());
  s.schur = schur_polynomial(s.diagram);
  s.weights = u_weights(c);
  s.calibration_lower = s.sigma->calibrate(s.schur, s.weights, s.diagram.size(), -s.periods.shift);
  return s;
}

}  // namespace trig

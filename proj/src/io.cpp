#include "hsred/io.hpp"

#include <cmath>
#include <ostream>

#include "hsred/observables.hpp"

namespace hsred {

nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

namespace {

template <typename T, typename F>
std::string join(const std::vector<T>& xs, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += fmt(xs[i]);
  }
  return out;
}

nlohmann::json ladder_json(const LadderConfig& c) {
  return {{"L", c.sites_per_leg},
          {"J_t", c.j_rung},
          {"J_l", c.j_leg},
          {"J_c", c.j_cross},
          {"gamma_tl", c.gamma_leg()},
          {"gamma_c", c.gamma_cross()},
          {"M_tot", c.m_tot.value()},
          {"boundary", std::string(to_string(c.boundary))}};
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const ReductionTrajectory& traj) {
  os << kTrajectoryHeader << '\n';
  for (std::size_t i = 0; i < traj.steps.size(); ++i) {
    const ReductionStep& s = traj.steps[i];
    os << i << ',' << s.n << ',' << format_double(s.g);
    for (double v : s.lambdas) os << ',' << format_double(v);
    for (double v : s.per_site) os << ',' << format_double(v);
    for (double v : s.p) os << ',' << format_double(v);
    os << ',' << format_double(s.entropy) << ','
       << join(s.eliminated, [](std::size_t x) { return std::to_string(x); }) << ','
       << (s.eliminated_amplitude.empty() ? std::string("0")
                                          : join(s.eliminated_amplitude, format_double))
       << ',' << s.root_iterations << '\n';
  }
}

nlohmann::json spectrum_json(const EigenResult& r, int sites_per_leg) {
  nlohmann::json values = nlohmann::json::array();
  nlohmann::json per_site = nlohmann::json::array();
  for (double v : r.values) {
    values.push_back(v);
    per_site.push_back(energy_per_site(v, sites_per_leg));
  }
  return {{"lambda", values},
          {"e", per_site},
          {"residuals", r.residuals},
          {"iterations", r.iterations},
          {"degenerate", r.degenerate}};
}

nlohmann::json trajectory_summary(const ReductionTrajectory& traj, const RunConfig& cfg) {
  nlohmann::json j;
  j["config"] = to_text(cfg);
  if (traj.config) j["ladder"] = ladder_json(*traj.config);
  j["stop_reason"] = std::string(to_string(traj.stop_reason));
  j["stop_detail"] = traj.stop_detail;
  j["g_initial"] = traj.g_initial;
  j["initial_dimension"] = traj.steps.empty() ? 0 : traj.steps.front().n;
  j["final_dimension"] = traj.steps.empty() ? 0 : traj.steps.back().n;
  j["final_g"] = traj.steps.empty() ? 0.0 : traj.steps.back().g;
  j["steps"] = traj.steps.size();
  j["initial_spectrum"] = spectrum_json(traj.initial, traj.sites_per_leg);
  return j;
}

void write_gap_curve_csv(std::ostream& os, const CrossingReport& report) {
  os << kGapCurveHeader << '\n';
  for (const GapPoint& p : report.curve) {
    os << format_double(p.param) << ',' << format_double(p.lambda1) << ','
       << format_double(p.lambda2) << ',' << format_double(p.gap) << '\n';
  }
}

nlohmann::json crossing_json(const CrossingReport& r) {
  return {{"parameter_path", r.parameter_path},
          {"g_e", r.g_e},
          {"min_gap", r.min_gap},
          {"lambda1", r.lambda1},
          {"bracket", {r.bracket.first, r.bracket.second}},
          {"ratio", number_or_null(r.ratio)},
          {"true_crossing", r.true_crossing},
          {"refinement_evaluations", r.refinement_evaluations},
          {"scan_points", r.curve.size()}};
}

}  // namespace hsred

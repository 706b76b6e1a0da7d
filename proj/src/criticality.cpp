#include "hsred/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsred/error.hpp"

namespace hsred {

std::string_view to_string(ScanParameter p) noexcept {
  switch (p) {
    case ScanParameter::leg_and_cross: return "J_l=J_c";
    case ScanParameter::leg: return "J_l";
    case ScanParameter::cross: return "J_c";
    case ScanParameter::rung: return "J_t";
  }
  return "unknown";
}

ScanParameter parse_scan_parameter(std::string_view text) {
  if (text == "J_l=J_c" || text == "leg_and_cross") return ScanParameter::leg_and_cross;
  if (text == "J_l" || text == "leg") return ScanParameter::leg;
  if (text == "J_c" || text == "cross") return ScanParameter::cross;
  if (text == "J_t" || text == "rung") return ScanParameter::rung;
  throw Error(ErrorCode::invalid_argument, "unknown scan parameter '" + std::string(text) + "'");
}

LadderConfig with_parameter(LadderConfig cfg, ScanParameter p, double value) {
  switch (p) {
    case ScanParameter::leg_and_cross: cfg.j_leg = cfg.j_cross = value; break;
    case ScanParameter::leg: cfg.j_leg = value; break;
    case ScanParameter::cross: cfg.j_cross = value; break;
    case ScanParameter::rung: cfg.j_rung = value; break;
  }
  return cfg;
}

double degeneracy_gap(const CouplingHamiltonian& h, double g, const EigenOptions& eopts) {
  if (h.dim() < 2) throw Error(ErrorCode::dimension_too_small, "gap needs at least two states");
  EigenOptions opts = eopts;
  opts.k = 2;
  opts.verify_multiplicity = true;
  const EigenResult r = lowest_k(h, g, opts);
  return std::max(0.0, r.values[1] - r.values[0]);
}

namespace {

GapPoint evaluate(const LadderConfig& tmpl, ScanParameter p, double value,
                  const EigenOptions& eopts) {
  const LadderConfig cfg = with_parameter(tmpl, p, value);
  const Ladder ladder = build_ladder(cfg);
  EigenOptions opts = eopts;
  opts.k = 2;
  opts.verify_multiplicity = true;
  const EigenResult r = lowest_k(ladder.hamiltonian, cfg.j_rung, opts);
  return {value, r.values[0], r.values[1], std::max(0.0, r.values[1] - r.values[0])};
}

bool is_crossing(const GapPoint& pt) { return pt.gap < 1e-6 * std::abs(pt.lambda1); }

}  // namespace

CrossingReport scan_crossing(const LadderConfig& tmpl, const ScanSpec& scan,
                             const EigenOptions& eopts) {
  if (scan.points < 3) throw Error(ErrorCode::invalid_argument, "scan needs at least 3 points");
  if (!(scan.to > scan.from)) throw Error(ErrorCode::invalid_argument, "scan range is empty");
  if (!(scan.rel_tol > 0.0)) throw Error(ErrorCode::invalid_argument, "rel_tol must be positive");

  CrossingReport report;
  report.parameter_path = std::string(to_string(scan.parameter));
  const double step = (scan.to - scan.from) / (scan.points - 1);
  for (int i = 0; i < scan.points; ++i) {
    const double x = i + 1 == scan.points ? scan.to : scan.from + i * step;
    report.curve.push_back(evaluate(tmpl, scan.parameter, x, eopts));
  }

  const auto best_it = std::min_element(report.curve.begin(), report.curve.end(),
                                        [](const GapPoint& a, const GapPoint& b) { return a.gap < b.gap; });
  const auto best = static_cast<std::size_t>(best_it - report.curve.begin());
  // A usable interior minimum must sit clearly below both endpoint gaps; a
  // flat curve (e.g. the dispersionless rung triplet at J_l = J_c) has none.
  const double noise = 1e-8 * std::abs(best_it->lambda1);
  const bool interior = best > 0 && best + 1 < report.curve.size() &&
                        best_it->gap < report.curve.front().gap - noise &&
                        best_it->gap < report.curve.back().gap - noise;
  if (!interior && !is_crossing(*best_it)) {
    throw Error(ErrorCode::no_crossing,
                "gap has no interior minimum below threshold; smallest gap " +
                    std::to_string(best_it->gap) + " at " + report.parameter_path + " = " +
                    std::to_string(best_it->param));
  }

  // Golden section on [left, right] around the grid minimum.
  GapPoint left = report.curve[interior ? best - 1 : best];
  GapPoint right = report.curve[interior ? best + 1 : best];
  GapPoint found = *best_it;
  if (interior) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    GapPoint x1 = evaluate(tmpl, scan.parameter, right.param - inv_phi * (right.param - left.param), eopts);
    GapPoint x2 = evaluate(tmpl, scan.parameter, left.param + inv_phi * (right.param - left.param), eopts);
    report.refinement_evaluations = 2;
    auto width_ok = [&](double rel) {
      const double scale = std::max(std::abs(0.5 * (left.param + right.param)), 1e-300);
      return (right.param - left.param) <= rel * scale;
    };
    constexpr int kMaxEvaluations = 200;
    while (report.refinement_evaluations < kMaxEvaluations) {
      const GapPoint& lead = x1.gap <= x2.gap ? x1 : x2;
      // past the requested width, continue only while chasing an exact crossing
      if (width_ok(scan.rel_tol) && (is_crossing(lead) || width_ok(1e-13))) break;
      if (x1.gap <= x2.gap) {
        right = x2;
        x2 = x1;
        x1 = evaluate(tmpl, scan.parameter, right.param - inv_phi * (right.param - left.param), eopts);
      } else {
        left = x1;
        x1 = x2;
        x2 = evaluate(tmpl, scan.parameter, left.param + inv_phi * (right.param - left.param), eopts);
      }
      ++report.refinement_evaluations;
    }
    found = left;
    for (const GapPoint* c : {&x1, &x2, &right})
      if (c->gap < found.gap) found = *c;
  }

  report.g_e = found.param;
  report.min_gap = found.gap;
  report.lambda1 = found.lambda1;
  report.bracket = {left.param, right.param};
  const LadderConfig at = with_parameter(tmpl, scan.parameter, found.param);
  report.ratio = at.j_leg > 0.0 ? at.j_rung / at.j_leg : std::numeric_limits<double>::infinity();
  report.true_crossing = is_crossing(found);
  return report;
}

FixedPointCheck fixed_point_drift(const ReductionTrajectory& traj, std::size_t n_floor) {
  if (traj.steps.empty()) throw Error(ErrorCode::empty_window, "trajectory has no steps");
  const double g0 = traj.steps.front().g;
  if (g0 == 0.0) throw Error(ErrorCode::division_guard, "initial coupling is zero");
  FixedPointCheck check;
  check.n_floor = n_floor;
  for (const ReductionStep& s : traj.steps) {
    if (s.n < n_floor) continue;
    ++check.window_steps;
    check.drift = std::max(check.drift, std::abs(s.g - g0) / std::abs(g0));
  }
  if (check.window_steps == 0) {
    throw Error(ErrorCode::empty_window,
                "no trajectory step has n >= " + std::to_string(n_floor));
  }
  return check;
}

}  // namespace hsred

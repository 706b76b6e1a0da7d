#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsred/eigensolver.hpp"
#include "hsred/hamiltonian.hpp"
#include "hsred/reduction.hpp"

namespace hsred {

// Coupling varied along a scan. leg_and_cross moves J_l and J_c together.
enum class ScanParameter { leg_and_cross, leg, cross, rung };
std::string_view to_string(ScanParameter p) noexcept;
ScanParameter parse_scan_parameter(std::string_view text);

LadderConfig with_parameter(LadderConfig cfg, ScanParameter p, double value);

struct ScanSpec {
  ScanParameter parameter = ScanParameter::leg_and_cross;
  double from = 10.0;
  double to = 14.0;
  int points = 41;
  double rel_tol = 1e-4;  // refinement stops no earlier than this relative width
};

struct GapPoint {
  double param;
  double lambda1;
  double lambda2;
  double gap;
};

struct CrossingReport {
  std::string parameter_path;
  double g_e = 0.0;        // crossing location in the scanned parameter
  double min_gap = 0.0;
  double lambda1 = 0.0;    // ground energy at g_e
  std::pair<double, double> bracket{};
  double ratio = 0.0;      // J_t / J_l at g_e
  bool true_crossing = false;  // min_gap < 1e-6 |lambda1|
  int refinement_evaluations = 0;
  std::vector<GapPoint> curve;  // uniform scan grid
};

// lambda2 - lambda1 >= 0 with multiplicity-safe Lanczos settings.
double degeneracy_gap(const CouplingHamiltonian& h, double g, const EigenOptions& eopts = {});

// Grid scan of the ground/first-excited gap followed by golden-section
// refinement around the grid minimum. Throws Error(no_crossing) when the
// minimum sits on a scan endpoint with a gap above the crossing threshold.
CrossingReport scan_crossing(const LadderConfig& tmpl, const ScanSpec& scan,
                             const EigenOptions& eopts = {});

struct FixedPointCheck {
  double drift = 0.0;  // max |g(n) - g(N)| / g(N) over steps with n >= n_floor
  std::size_t n_floor = 0;
  std::size_t window_steps = 0;
};

FixedPointCheck fixed_point_drift(const ReductionTrajectory& traj, std::size_t n_floor);

}  // namespace hsred

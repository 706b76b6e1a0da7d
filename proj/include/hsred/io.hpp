#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hsred/config.hpp"
#include "hsred/criticality.hpp"
#include "hsred/eigensolver.hpp"
#include "hsred/reduction.hpp"

namespace hsred {

inline constexpr const char* kTrajectoryHeader =
    "step,n,g,lambda1,lambda2,lambda3,e1,e2,e3,p1,p2,p3,entropy,eliminated,elim_amp,root_iters";
inline constexpr const char* kGapCurveHeader = "param,lambda1,lambda2,gap";

// One row per step. Multiple eliminated states are joined with ';'.
void write_trajectory_csv(std::ostream& os, const ReductionTrajectory& traj);
nlohmann::json trajectory_summary(const ReductionTrajectory& traj, const RunConfig& cfg);

void write_gap_curve_csv(std::ostream& os, const CrossingReport& report);
nlohmann::json crossing_json(const CrossingReport& report);

nlohmann::json spectrum_json(const EigenResult& r, int sites_per_leg);

// JSON numbers cannot be NaN; those become null.
nlohmann::json number_or_null(double v);

}  // namespace hsred

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsred/eigensolver.hpp"
#include "hsred/hamiltonian.hpp"

namespace hsred {

enum class StopReason { reached_n_min, accuracy_exceeded, root_failure, positive_ground };
std::string_view to_string(StopReason r) noexcept;

// How the renormalized coupling is obtained after each elimination.
//  closed_form: g = lambda1 / mu_min(h1), valid only when h0 = 0
//  bracketed:   Brent root solve of lambda_min(g) = lambda1
//  automatic:   closed_form when h0 = 0, bracketed otherwise
enum class RootMethod { automatic, closed_form, bracketed };
std::string_view to_string(RootMethod m) noexcept;
RootMethod parse_root_method(std::string_view text);

struct ReductionOptions {
  std::size_t n_min = 8;
  double p_max = 5.0;               // percent
  std::size_t batch = 1;            // states removed per step
  double g_bracket_factor = 2.0;
  double lambda_tol_rel = 1e-10;    // pinning tolerance relative to |lambda1|
  RootMethod root_method = RootMethod::automatic;
  // Optional coarse schedule: while n > coarse_above, remove
  // max(batch, floor(coarse_fraction * n)) states per step without going
  // below coarse_above. Disabled when coarse_fraction is 0.
  double coarse_fraction = 0.0;
  std::size_t coarse_above = 2000;

  double lambda_tol(double lambda1) const noexcept;
  std::size_t removal_count(std::size_t n) const noexcept;
  void validate(const EigenOptions& eopts) const;
};

struct ReductionStep {
  std::size_t n = 0;
  double g = 0.0;
  std::array<double, 3> lambdas{};
  std::array<double, 3> per_site{};
  std::array<double, 3> p{};
  double entropy = 0.0;
  std::vector<std::size_t> eliminated;          // original basis ordinals
  std::vector<double> eliminated_amplitude;     // |a| before removal
  int root_iterations = 0;
};

struct ReductionTrajectory {
  std::optional<LadderConfig> config;
  int sites_per_leg = 0;
  double g_initial = 0.0;
  EigenResult initial;
  std::vector<ReductionStep> steps;  // steps[0] is the unreduced space
  StopReason stop_reason = StopReason::reached_n_min;
  std::string stop_detail;
  std::vector<std::size_t> surviving;  // labels left at the end
};

// Positions sorted by descending |a_i|; ties keep ascending position, which is
// ascending original ordinal because restrictions preserve order.
std::vector<std::size_t> order_by_amplitude(std::span<const double> ground);

struct Renormalization {
  double g = 0.0;
  int iterations = 0;  // root-solver iterations, 0 for the closed form
};

// Solves lambda_min(h0 + g h1) = lambda_target for g, starting the bracket at
// [g_prev / factor, g_prev * factor].
Renormalization renormalize_coupling(const CouplingHamiltonian& h, double lambda_target,
                                     double g_prev, const ReductionOptions& ropts,
                                     const EigenOptions& eopts = {});

struct StepOutcome {
  CouplingHamiltonian hamiltonian;
  ReductionStep step;
  EigenResult spectrum;  // at the renormalized coupling
};

// One elimination: drop the lowest-|amplitude| states of `current.ground()`,
// restrict, renormalize g so the ground energy stays at lambda1, re-solve.
// `reference_per_site` holds the unreduced e_i used for p(i).
StepOutcome reduce_step(const CouplingHamiltonian& h, double g, double lambda1,
                        const EigenResult& current, int sites_per_leg,
                        std::span<const double> reference_per_site,
                        const ReductionOptions& ropts, const EigenOptions& eopts);

// Full reduction of an arbitrary H0 + g H1 from g_initial down to n_min.
ReductionTrajectory reduce(const CouplingHamiltonian& h, double g_initial, int sites_per_leg,
                           const EigenOptions& eopts, const ReductionOptions& ropts);

// Ladder reduction starting from g = J_t.
ReductionTrajectory run_reduction(const LadderConfig& cfg, const EigenOptions& eopts,
                                  const ReductionOptions& ropts);

}  // namespace hsred

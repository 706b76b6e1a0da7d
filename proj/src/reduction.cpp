#include "hsred/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hsred/error.hpp"
#include "hsred/observables.hpp"
#include "hsred/root_finding.hpp"

namespace hsred {

std::string_view to_string(StopReason r) noexcept {
  switch (r) {
    case StopReason::reached_n_min: return "reached_n_min";
    case StopReason::accuracy_exceeded: return "accuracy_exceeded";
    case StopReason::root_failure: return "root_failure";
    case StopReason::positive_ground: return "positive_ground";
  }
  return "unknown";
}

std::string_view to_string(RootMethod m) noexcept {
  switch (m) {
    case RootMethod::automatic: return "automatic";
    case RootMethod::closed_form: return "closed_form";
    case RootMethod::bracketed: return "bracketed";
  }
  return "unknown";
}

RootMethod parse_root_method(std::string_view text) {
  if (text == "automatic") return RootMethod::automatic;
  if (text == "closed_form") return RootMethod::closed_form;
  if (text == "bracketed") return RootMethod::bracketed;
  throw Error(ErrorCode::invalid_argument, "unknown root method '" + std::string(text) + "'");
}

double ReductionOptions::lambda_tol(double lambda1) const noexcept {
  return lambda_tol_rel * std::abs(lambda1);
}

std::size_t ReductionOptions::removal_count(std::size_t n) const noexcept {
  std::size_t count = batch;
  if (coarse_fraction > 0.0 && n > coarse_above) {
    const auto coarse = static_cast<std::size_t>(coarse_fraction * static_cast<double>(n));
    count = std::max(count, std::min(coarse, n - coarse_above));
  }
  return std::min(count, n > n_min ? n - n_min : 0);
}

void ReductionOptions::validate(const EigenOptions& eopts) const {
  if (n_min < static_cast<std::size_t>(eopts.k) + 2) {
    throw Error(ErrorCode::invalid_argument,
                "n_min must be at least k + 2 = " + std::to_string(eopts.k + 2));
  }
  if (batch < 1) throw Error(ErrorCode::invalid_argument, "batch must be at least 1");
  if (!(g_bracket_factor > 1.0)) {
    throw Error(ErrorCode::invalid_argument, "g_bracket_factor must exceed 1");
  }
  if (!(lambda_tol_rel > 0.0)) throw Error(ErrorCode::invalid_argument, "lambda_tol must be positive");
  if (!(p_max > 0.0)) throw Error(ErrorCode::invalid_argument, "p_max must be positive");
  if (coarse_fraction < 0.0 || coarse_fraction >= 1.0) {
    throw Error(ErrorCode::invalid_argument, "coarse_fraction must lie in [0, 1)");
  }
}

std::vector<std::size_t> order_by_amplitude(std::span<const double> ground) {
  std::vector<std::size_t> order(ground.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(ground[a]) > std::abs(ground[b]);
  });
  return order;
}

namespace {

bool use_closed_form(const CouplingHamiltonian& h, RootMethod method) {
  switch (method) {
    case RootMethod::closed_form:
      if (!h.h0().is_zero()) {
        throw Error(ErrorCode::invalid_argument, "closed-form renormalization requires h0 = 0");
      }
      return true;
    case RootMethod::bracketed: return false;
    case RootMethod::automatic: return h.h0().is_zero();
  }
  return false;
}

double closed_form_coupling(double lambda_target, double mu_min) {
  const double g = lambda_target / mu_min;
  if (!(mu_min != 0.0) || !std::isfinite(g) || !(g > 0.0)) {
    throw Error(ErrorCode::no_root, "target " + std::to_string(lambda_target) +
                                        " unreachable: lowest eigenvalue of h1 is " +
                                        std::to_string(mu_min));
  }
  return g;
}

Renormalization bracketed_coupling(const CouplingHamiltonian& h, double lambda_target,
                                   double g_prev, const ReductionOptions& ropts,
                                   const EigenOptions& eopts) {
  EigenOptions ground_only = eopts;
  ground_only.k = 1;
  ground_only.verify_multiplicity = false;
  auto f = [&](double g) { return lowest_k(h, g, ground_only).values.front() - lambda_target; };

  double lo, hi;
  if (g_prev > 0.0) {
    lo = g_prev / ropts.g_bracket_factor;
    hi = g_prev * ropts.g_bracket_factor;
  } else {
    const double w = std::max(1.0, std::abs(g_prev));
    lo = g_prev - w;
    hi = g_prev + w;
  }
  Bracket bracket;
  try {
    bracket = expand_bracket(f, lo, hi, ropts.g_bracket_factor, 60);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::bracket_failure) throw;
    throw Error(ErrorCode::bracket_failure,
                "no coupling reaches lambda = " + std::to_string(lambda_target) + ": " + e.what());
  }
  // half the pinning budget, the rest covers the final re-solve
  const RootResult root = brent(f, bracket, 0.5 * ropts.lambda_tol(lambda_target), 0.0, 200);
  if (!(std::abs(root.fx) <= ropts.lambda_tol(lambda_target))) {
    throw Error(ErrorCode::no_root, "root solve stalled at |f| = " + std::to_string(root.fx));
  }
  return {root.x, root.iterations + bracket.expansions};
}

// Renormalized coupling together with the spectrum at that coupling.
std::pair<Renormalization, EigenResult> renormalize_and_solve(const CouplingHamiltonian& h,
                                                              double lambda_target, double g_prev,
                                                              const ReductionOptions& ropts,
                                                              const EigenOptions& eopts) {
  if (use_closed_form(h, ropts.root_method)) {
    // eigenvectors of g h1 are those of h1 for g > 0
    EigenResult spectrum = lowest_k(h, 1.0, eopts);
    const double g = closed_form_coupling(lambda_target, spectrum.values.front());
    for (double& v : spectrum.values) v *= g;
    for (double& r : spectrum.residuals) r *= g;
    return {{g, 0}, std::move(spectrum)};
  }
  Renormalization r = bracketed_coupling(h, lambda_target, g_prev, ropts, eopts);
  return {r, lowest_k(h, r.g, eopts)};
}

ReductionStep make_record(std::size_t n, double g, const EigenResult& eig, int sites_per_leg,
                          std::span<const double> reference_per_site) {
  ReductionStep s;
  s.n = n;
  s.g = g;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < 3; ++i) {
    if (i < eig.values.size()) {
      s.lambdas[i] = eig.values[i];
      s.per_site[i] = energy_per_site(eig.values[i], sites_per_leg);
      s.p[i] = i < reference_per_site.size() ? accuracy_loss(reference_per_site[i], s.per_site[i])
                                             : nan;
    } else {
      s.lambdas[i] = s.per_site[i] = s.p[i] = nan;
    }
  }
  s.entropy = ground_entropy(eig.ground(), sites_per_leg);
  return s;
}

}  // namespace

Renormalization renormalize_coupling(const CouplingHamiltonian& h, double lambda_target,
                                     double g_prev, const ReductionOptions& ropts,
                                     const EigenOptions& eopts) {
  if (h.dim() < 1) throw Error(ErrorCode::dimension_too_small, "empty Hamiltonian");
  if (!std::isfinite(lambda_target)) {
    throw Error(ErrorCode::invalid_argument, "target eigenvalue must be finite");
  }
  if (use_closed_form(h, ropts.root_method)) {
    EigenOptions ground_only = eopts;
    ground_only.k = 1;
    const double mu = lowest_k(h, 1.0, ground_only).values.front();
    return {closed_form_coupling(lambda_target, mu), 0};
  }
  return bracketed_coupling(h, lambda_target, g_prev, ropts, eopts);
}

StepOutcome reduce_step(const CouplingHamiltonian& h, double g, double lambda1,
                        const EigenResult& current, int sites_per_leg,
                        std::span<const double> reference_per_site,
                        const ReductionOptions& ropts, const EigenOptions& eopts) {
  if (h.dim() <= ropts.n_min) {
    throw Error(ErrorCode::dimension_too_small, "dimension already at or below n_min");
  }
  const auto ground = current.ground();
  if (ground.size() != h.dim()) {
    throw Error(ErrorCode::length_mismatch, "ground vector does not match the Hamiltonian");
  }
  const std::size_t remove = ropts.removal_count(h.dim());
  const auto order = order_by_amplitude(ground);

  std::vector<std::size_t> keep(order.begin(), order.end() - static_cast<std::ptrdiff_t>(remove));
  std::sort(keep.begin(), keep.end());

  std::vector<std::size_t> eliminated;
  std::vector<double> amplitudes;
  for (auto it = order.end() - static_cast<std::ptrdiff_t>(remove); it != order.end(); ++it) {
    eliminated.push_back(h.labels()[*it]);
    amplitudes.push_back(std::abs(ground[*it]));
  }

  CouplingHamiltonian reduced = h.restrict(keep);
  auto [renorm, spectrum] = renormalize_and_solve(reduced, lambda1, g, ropts, eopts);

  const double drift = std::abs(spectrum.values.front() - lambda1);
  if (!(drift <= ropts.lambda_tol(lambda1))) {
    throw Error(ErrorCode::no_root, "ground energy could not be pinned: deviation " +
                                        std::to_string(drift) + " at n = " +
                                        std::to_string(reduced.dim()));
  }

  ReductionStep step =
      make_record(reduced.dim(), renorm.g, spectrum, sites_per_leg, reference_per_site);
  step.eliminated = std::move(eliminated);
  step.eliminated_amplitude = std::move(amplitudes);
  step.root_iterations = renorm.iterations;
  return {std::move(reduced), std::move(step), std::move(spectrum)};
}

ReductionTrajectory reduce(const CouplingHamiltonian& h, double g_initial, int sites_per_leg,
                           const EigenOptions& eopts, const ReductionOptions& ropts) {
  ropts.validate(eopts);
  ReductionTrajectory traj;
  traj.sites_per_leg = sites_per_leg;
  traj.g_initial = g_initial;
  traj.initial = lowest_k(h, g_initial, eopts);

  const double lambda1 = traj.initial.values.front();
  std::vector<double> reference;
  for (double v : traj.initial.values) reference.push_back(energy_per_site(v, sites_per_leg));
  traj.steps.push_back(make_record(h.dim(), g_initial, traj.initial, sites_per_leg, reference));
  traj.surviving.assign(h.labels().begin(), h.labels().end());

  if (!(lambda1 < 0.0)) {
    traj.stop_reason = StopReason::positive_ground;
    traj.stop_detail = "ground energy " + std::to_string(lambda1) + " is not negative";
    return traj;
  }

  CouplingHamiltonian current_h = h;
  EigenResult current = traj.initial;
  double g = g_initial;
  traj.stop_reason = StopReason::reached_n_min;
  while (current_h.dim() > ropts.n_min) {
    try {
      StepOutcome out = reduce_step(current_h, g, lambda1, current, sites_per_leg, reference,
                                    ropts, eopts);
      current_h = std::move(out.hamiltonian);
      current = std::move(out.spectrum);
      g = out.step.g;
      traj.steps.push_back(std::move(out.step));
    } catch (const Error& e) {
      traj.stop_reason = StopReason::root_failure;
      traj.stop_detail = e.what();
      break;
    }
    if (traj.steps.back().p[0] > ropts.p_max) {
      traj.stop_reason = StopReason::accuracy_exceeded;
      traj.stop_detail = "p(1) = " + std::to_string(traj.steps.back().p[0]) + "% exceeds p_max";
      break;
    }
  }
  traj.surviving.assign(current_h.labels().begin(), current_h.labels().end());
  return traj;
}

ReductionTrajectory run_reduction(const LadderConfig& cfg, const EigenOptions& eopts,
                                  const ReductionOptions& ropts) {
  const Ladder ladder = build_ladder(cfg);
  ReductionTrajectory traj =
      reduce(ladder.hamiltonian, cfg.j_rung, cfg.sites_per_leg, eopts, ropts);
  traj.config = cfg;
  return traj;
}

}  // namespace hsred

#include "hsred/observables.hpp"

#include <cmath>
#include <string>

#include "hsred/error.hpp"

namespace hsred {

double energy_per_site(double lambda, int sites_per_leg) {
  if (sites_per_leg < 1) throw Error(ErrorCode::invalid_argument, "sites per leg must be positive");
  return lambda / sites_per_leg;
}

double accuracy_loss(double e_ref, double e_now) {
  if (!(std::abs(e_ref) >= 1e-30)) {
    throw Error(ErrorCode::division_guard, "reference energy too close to zero for a relative loss");
  }
  return std::abs((e_ref - e_now) / e_ref) * 100.0;
}

double ground_entropy(std::span<const double> ground, int sites_per_leg) {
  if (sites_per_leg < 1) throw Error(ErrorCode::invalid_argument, "sites per leg must be positive");
  double norm2 = 0.0;
  for (double a : ground) norm2 += a * a;
  if (!(std::abs(std::sqrt(norm2) - 1.0) <= 1e-8)) {
    throw Error(ErrorCode::norm_violation,
                "ground vector norm " + std::to_string(std::sqrt(norm2)) + " is not 1");
  }
  double s = 0.0;
  for (double a : ground) {
    const double p = a * a;
    if (p > 0.0) s -= p * std::log(p);
  }
  return s / (2.0 * sites_per_leg);
}

}  // namespace hsred

#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace hsred {

// Energy per rung, lambda / L. This is the normalization under which the
// ladder energies are quoted (rung singlet at J_t = 15 gives -11.25).
double energy_per_site(double lambda, int sites_per_leg);

// Percentage loss of accuracy |(e_ref - e_now) / e_ref| * 100.
double accuracy_loss(double e_ref, double e_now);

// Shannon entropy of the ground-state weights P_i = a_i^2 divided by the
// number of sites 2L, in nats. 0 ln 0 is taken as 0.
double ground_entropy(std::span<const double> ground, int sites_per_leg);

struct ObservableSet {
  std::array<double, 3> p{};
  double entropy = 0.0;
  std::size_t n = 0;
};

}  // namespace hsred

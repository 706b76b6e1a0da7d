#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hsred/basis.hpp"
#include "hsred/sparse_matrix.hpp"

namespace hsred {

enum class Boundary { open, periodic };

std::string_view to_string(Boundary b) noexcept;
Boundary parse_boundary(std::string_view text);

// Frustrated two-leg spin-1/2 ladder: rung coupling J_t, leg coupling J_l and
// nearest-neighbour diagonal coupling J_c.
struct LadderConfig {
  int sites_per_leg = 6;
  double j_rung = 15.0;
  double j_leg = 5.0;
  double j_cross = 3.0;
  Boundary boundary = Boundary::open;
  HalfInt m_tot{};

  double gamma_leg() const noexcept { return j_leg / j_rung; }
  double gamma_cross() const noexcept { return j_cross / j_rung; }

  void validate() const;  // throws Error(invalid_argument)
};

// Heisenberg bond s_a . s_b between bit positions a and b, weighted by the
// coefficient it carries in H1 (1 for rungs, gamma_tl for legs, gamma_c for
// diagonals).
struct Bond {
  int a;
  int b;
  double coefficient;
};

std::vector<Bond> ladder_bonds(const LadderConfig& cfg);

// H = H0 + g H1 restricted to a set of surviving basis states. The coupling g
// is supplied at evaluation time so renormalizing it never rebuilds matrices.
class CouplingHamiltonian {
 public:
  CouplingHamiltonian(SparseSymmetricMatrix h0, SparseSymmetricMatrix h1,
                      std::vector<std::size_t> labels);
  // Labels default to 0..dim-1.
  CouplingHamiltonian(SparseSymmetricMatrix h0, SparseSymmetricMatrix h1);

  std::size_t dim() const noexcept { return h1_.dim(); }
  const SparseSymmetricMatrix& h0() const noexcept { return h0_; }
  const SparseSymmetricMatrix& h1() const noexcept { return h1_; }
  // Original basis ordinals of the current positions, ascending.
  std::span<const std::size_t> labels() const noexcept { return labels_; }

  // (h0 + g h1) v
  std::vector<double> apply(double g, std::span<const double> v) const;
  void apply_into(double g, std::span<const double> v, std::span<double> out) const;

  std::vector<double> diagonal(double g) const;

  // Principal submatrix on `keep` (strictly increasing current positions).
  CouplingHamiltonian restrict(std::span<const std::size_t> keep) const;

 private:
  SparseSymmetricMatrix h0_;
  SparseSymmetricMatrix h1_;
  std::vector<std::size_t> labels_;
};

struct Ladder {
  SpinBasis basis;
  CouplingHamiltonian hamiltonian;
};

// Builds the coupling-free part H1 of the ladder in the requested sector, with
// H0 = 0 so that g = J_t reproduces the physical Hamiltonian.
Ladder build_ladder(const LadderConfig& cfg, std::size_t dimension_cap = kDefaultDimensionCap);

}  // namespace hsred

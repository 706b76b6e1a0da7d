#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hsred/hamiltonian.hpp"

namespace hsred {

struct EigenOptions {
  int k = 3;                       // number of lowest eigenpairs
  double tol = 1e-10;              // residual bound, relative to max(1, |lambda|)
  int max_iter = 0;                // Krylov cap per pass; 0 means min(dim, 500)
  std::uint64_t seed = 20080417;   // start-vector seed
  bool verify_multiplicity = true; // extra pass in the complement of the found pairs

  int krylov_cap(std::size_t dim) const noexcept;
};

struct EigenResult {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // unit norm, one per value
  std::vector<double> residuals;            // ||H v - lambda v||
  int iterations = 0;                       // total matrix-vector products
  bool degenerate = false;                  // |lambda2 - lambda1| <= 1e-8 max(1, |lambda1|)

  std::span<const double> ground() const noexcept { return vectors.front(); }
};

// k lowest eigenpairs of h0 + g h1 by Lanczos with full reorthogonalization.
// Exact breakdowns restart from a fresh seeded vector orthogonal to the Krylov
// space. With verify_multiplicity, a further Lanczos pass runs in the
// orthogonal complement of the converged vectors so that copies of degenerate
// eigenvalues invisible to a single Krylov sequence are still returned.
EigenResult lowest_k(const CouplingHamiltonian& h, double g, const EigenOptions& opts = {});

inline constexpr std::size_t kDenseLimit = 4096;

// Full ascending spectrum from a dense symmetric eigensolve (dim <= kDenseLimit).
std::vector<double> dense_spectrum(const CouplingHamiltonian& h, double g);

struct DenseEigensystem {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};
DenseEigensystem dense_eigensystem(const CouplingHamiltonian& h, double g);

// Row-major dense copy of h0 + g h1 (dim <= kDenseLimit).
std::vector<double> dense_matrix(const CouplingHamiltonian& h, double g);

// Flips the vector so its largest-magnitude component (first on ties) is positive.
void fix_sign(std::span<double> v) noexcept;

}  // namespace hsred

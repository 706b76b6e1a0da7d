#include "hsred/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsred/error.hpp"

namespace hsred {

std::string_view to_string(Boundary b) noexcept {
  return b == Boundary::open ? "open" : "periodic";
}

Boundary parse_boundary(std::string_view text) {
  if (text == "open") return Boundary::open;
  if (text == "periodic") return Boundary::periodic;
  throw Error(ErrorCode::invalid_argument,
              "boundary must be 'open' or 'periodic', got '" + std::string(text) + "'");
}

void LadderConfig::validate() const {
  if (sites_per_leg < 1 || sites_per_leg > kMaxSitesPerLeg) {
    throw Error(ErrorCode::invalid_argument, "sites per leg out of range");
  }
  if (!(j_rung > 0.0) || !std::isfinite(j_rung)) {
    throw Error(ErrorCode::invalid_argument, "rung coupling J_t must be positive and finite");
  }
  if (!(j_leg >= 0.0) || !std::isfinite(j_leg) || !(j_cross >= 0.0) || !std::isfinite(j_cross)) {
    throw Error(ErrorCode::invalid_argument, "couplings J_l and J_c must be non-negative and finite");
  }
  if (!std::isfinite(gamma_leg()) || !std::isfinite(gamma_cross())) {
    throw Error(ErrorCode::invalid_argument, "coupling ratios are not finite");
  }
  if (boundary == Boundary::periodic && sites_per_leg < 3) {
    throw Error(ErrorCode::invalid_argument, "periodic boundary needs at least 3 rungs");
  }
}

std::vector<Bond> ladder_bonds(const LadderConfig& cfg) {
  const int L = cfg.sites_per_leg;
  std::vector<Bond> bonds;
  for (int i = 0; i < L; ++i) bonds.push_back({site_bit(i, 0), site_bit(i, 1), 1.0});

  const int links = cfg.boundary == Boundary::periodic ? L : L - 1;
  for (int i = 0; i < links; ++i) {
    const int j = (i + 1) % L;
    if (cfg.j_leg != 0.0) {
      bonds.push_back({site_bit(i, 0), site_bit(j, 0), cfg.gamma_leg()});
      bonds.push_back({site_bit(i, 1), site_bit(j, 1), cfg.gamma_leg()});
    }
    if (cfg.j_cross != 0.0) {
      bonds.push_back({site_bit(i, 0), site_bit(j, 1), cfg.gamma_cross()});
      bonds.push_back({site_bit(i, 1), site_bit(j, 0), cfg.gamma_cross()});
    }
  }
  return bonds;
}

CouplingHamiltonian::CouplingHamiltonian(SparseSymmetricMatrix h0, SparseSymmetricMatrix h1,
                                         std::vector<std::size_t> labels)
    : h0_(std::move(h0)), h1_(std::move(h1)), labels_(std::move(labels)) {
  if (h0_.dim() != h1_.dim() || labels_.size() != h1_.dim()) {
    throw Error(ErrorCode::length_mismatch, "h0, h1 and labels must share one dimension");
  }
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw Error(ErrorCode::invalid_argument, "labels must be strictly increasing");
  }
}

CouplingHamiltonian::CouplingHamiltonian(SparseSymmetricMatrix h0, SparseSymmetricMatrix h1)
    : CouplingHamiltonian(std::move(h0), std::move(h1), [&] {
        std::vector<std::size_t> l(h1.dim());
        for (std::size_t i = 0; i < l.size(); ++i) l[i] = i;
        return l;
      }()) {}

void CouplingHamiltonian::apply_into(double g, std::span<const double> v,
                                     std::span<double> out) const {
  if (v.size() != dim() || out.size() != dim()) {
    throw Error(ErrorCode::length_mismatch, "vector length " + std::to_string(v.size()) +
                                                " does not match dimension " +
                                                std::to_string(dim()));
  }
  std::fill(out.begin(), out.end(), 0.0);
  if (!h0_.is_zero()) h0_.multiply_add(1.0, v, out);
  h1_.multiply_add(g, v, out);
}

std::vector<double> CouplingHamiltonian::apply(double g, std::span<const double> v) const {
  std::vector<double> out(dim());
  apply_into(g, v, out);
  return out;
}

std::vector<double> CouplingHamiltonian::diagonal(double g) const {
  auto d = h0_.diagonal();
  const auto d1 = h1_.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += g * d1[i];
  return d;
}

CouplingHamiltonian CouplingHamiltonian::restrict(std::span<const std::size_t> keep) const {
  if (keep.empty()) throw Error(ErrorCode::empty_keep, "restriction must keep at least one state");
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= dim()) throw Error(ErrorCode::out_of_range, "kept position outside dimension");
    if (k > 0 && keep[k] <= keep[k - 1]) {
      throw Error(ErrorCode::invalid_argument, "kept positions must be strictly increasing");
    }
  }
  std::vector<std::size_t> labels(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) labels[k] = labels_[keep[k]];
  return CouplingHamiltonian(h0_.principal_submatrix(keep), h1_.principal_submatrix(keep),
                             std::move(labels));
}

Ladder build_ladder(const LadderConfig& cfg, std::size_t dimension_cap) {
  cfg.validate();
  SpinBasis basis(cfg.sites_per_leg, cfg.m_tot, dimension_cap);
  const auto bonds = ladder_bonds(cfg);

  // s_a.s_b = Sz_a Sz_b + (S+_a S-_b + S-_a S+_b)/2
  std::vector<std::vector<SparseSymmetricMatrix::Entry>> rows(basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const std::uint64_t bits = basis[p].bits;
    double diag = 0.0;
    for (const Bond& bond : bonds) {
      const bool up_a = (bits >> bond.a) & 1U;
      const bool up_b = (bits >> bond.b) & 1U;
      if (up_a == up_b) {
        diag += 0.25 * bond.coefficient;
      } else {
        diag -= 0.25 * bond.coefficient;
        const SpinConfig flipped{bits ^ ((std::uint64_t{1} << bond.a) | (std::uint64_t{1} << bond.b))};
        const std::size_t q = basis.index(flipped);
        rows[p].push_back({static_cast<std::uint32_t>(q), 0.5 * bond.coefficient});
      }
    }
    rows[p].push_back({static_cast<std::uint32_t>(p), diag});
  }

  SparseSymmetricMatrix h1 = SparseSymmetricMatrix::from_rows(std::move(rows));
  SparseSymmetricMatrix h0(h1.dim());
  return Ladder{std::move(basis), CouplingHamiltonian(std::move(h0), std::move(h1))};
}

}  // namespace hsred

#include "hsred/basis.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "hsred/error.hpp"

namespace hsred {

HalfInt HalfInt::from_double(double value) {
  const double twice = 2.0 * value;
  const double rounded = std::round(twice);
  if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-9) {
    throw Error(ErrorCode::invalid_argument,
                "spin projection must be a multiple of 1/2, got " + std::to_string(value));
  }
  return HalfInt(static_cast<int>(rounded));
}

HalfInt magnetization(SpinConfig c, int sites_per_leg) {
  const int ups = std::popcount(c.bits);
  return HalfInt::from_twice(2 * ups - 2 * sites_per_leg);
}

std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

namespace {

// Next larger integer with the same popcount (Gosper).
std::uint64_t next_combination(std::uint64_t x) noexcept {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  return ripple | (((x ^ ripple) >> 2) / lowest);
}

}  // namespace

SpinBasis::SpinBasis(int sites_per_leg, HalfInt m_tot, std::size_t dimension_cap)
    : sites_per_leg_(sites_per_leg), m_tot_(m_tot), num_up_(0) {
  if (sites_per_leg < 1 || sites_per_leg > kMaxSitesPerLeg) {
    throw Error(ErrorCode::invalid_argument,
                "sites per leg must lie in [1, " + std::to_string(kMaxSitesPerLeg) + "], got " +
                    std::to_string(sites_per_leg));
  }
  const int n = num_sites();
  // 2 M = #up - #down and #up + #down = 2L
  if (!m_tot.is_integral() || std::abs(m_tot.twice()) > n) {
    throw Error(ErrorCode::empty_sector, "total projection M_tot = " +
                                             std::to_string(m_tot.value()) +
                                             " is not reachable with " + std::to_string(n) +
                                             " spin-1/2 sites");
  }
  num_up_ = sites_per_leg + m_tot.twice() / 2;
  const std::uint64_t dim = binomial(n, num_up_);
  if (dim > dimension_cap) {
    throw Error(ErrorCode::dimension_overflow,
                "sector dimension " + std::to_string(dim) + " exceeds cap " +
                    std::to_string(dimension_cap));
  }

  configs_.reserve(dim);
  if (num_up_ == 0) {
    configs_.push_back({0});
  } else {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t x = (std::uint64_t{1} << num_up_) - 1; x < limit; x = next_combination(x)) {
      configs_.push_back({x});
    }
  }

  const int width = num_up_ + 1;
  rank_table_.resize(static_cast<std::size_t>(n) * width);
  for (int b = 0; b < n; ++b)
    for (int j = 0; j < width; ++j) rank_table_[b * width + j] = binomial(b, j);
}

std::size_t SpinBasis::index(SpinConfig c) const noexcept {
  const int n = num_sites();
  if (n < 64 && (c.bits >> n) != 0) return size();
  if (std::popcount(c.bits) != num_up_) return size();
  const int width = num_up_ + 1;
  std::uint64_t rank = 0;
  std::uint64_t bits = c.bits;
  for (int j = 1; bits != 0; ++j) {
    const int b = std::countr_zero(bits);
    rank += rank_table_[b * width + j];
    bits &= bits - 1;
  }
  return static_cast<std::size_t>(rank);
}

SpinBasis enumerate_sector(int sites_per_leg, HalfInt m_tot, std::size_t dimension_cap) {
  return SpinBasis(sites_per_leg, m_tot, dimension_cap);
}

}  // namespace hsred

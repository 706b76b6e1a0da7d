#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hsred {

// Half-integer spin projection stored as twice its value so that sums over
// spin-1/2 sites stay exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) noexcept { return HalfInt(twice); }
  static HalfInt from_double(double value);  // throws unless value is a multiple of 1/2

  constexpr int twice() const noexcept { return twice_; }
  constexpr double value() const noexcept { return 0.5 * twice_; }
  constexpr bool is_integral() const noexcept { return twice_ % 2 == 0; }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

// Product state of a two-leg ladder. Site i on leg k (k = 0, 1) lives at bit
// 2i + k, so the two spins of a rung are adjacent bits. A set bit is spin up.
struct SpinConfig {
  std::uint64_t bits = 0;
  friend constexpr bool operator==(SpinConfig, SpinConfig) = default;
};

constexpr int site_bit(int site, int leg) noexcept { return 2 * site + leg; }

inline constexpr std::size_t kDefaultDimensionCap = 10'000'000;
inline constexpr int kMaxSitesPerLeg = 16;

// Total S^z of a configuration over the low 2L bits: (#up - #down) / 2.
HalfInt magnetization(SpinConfig c, int sites_per_leg);

// Binomial coefficient for small arguments; 0 when k is outside [0, n].
std::uint64_t binomial(int n, int k) noexcept;

// All configurations of a 2L-site ladder with fixed total S^z, in ascending
// bit order. Lookup is a colex combinadic rank, so no hash table is stored.
class SpinBasis {
 public:
  SpinBasis(int sites_per_leg, HalfInt m_tot, std::size_t dimension_cap = kDefaultDimensionCap);

  int sites_per_leg() const noexcept { return sites_per_leg_; }
  int num_sites() const noexcept { return 2 * sites_per_leg_; }
  HalfInt m_tot() const noexcept { return m_tot_; }
  std::size_t size() const noexcept { return configs_.size(); }

  std::span<const SpinConfig> configs() const noexcept { return configs_; }
  SpinConfig operator[](std::size_t pos) const { return configs_[pos]; }

  // Position of `c` in the basis, or size() when c is not in this sector.
  std::size_t index(SpinConfig c) const noexcept;
  bool contains(SpinConfig c) const noexcept { return index(c) != size(); }

 private:
  int sites_per_leg_;
  HalfInt m_tot_;
  int num_up_;
  std::vector<SpinConfig> configs_;
  // rank_table_[bit * (num_up_ + 1) + j] = C(bit, j)
  std::vector<std::uint64_t> rank_table_;
};

SpinBasis enumerate_sector(int sites_per_leg, HalfInt m_tot,
                           std::size_t dimension_cap = kDefaultDimensionCap);

}  // namespace hsred

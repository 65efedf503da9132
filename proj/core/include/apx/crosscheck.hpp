#pragma once

#include <cstdint>
#include <random>

#include "apx/group.hpp"
#include "apx/subset.hpp"

namespace apx {

/// Random product of 1..max_factors cyclic groups (moduli >= 2) of order
/// <= max_order. Half of the draws use odd moduli only.
GroupSpec random_group(std::mt19937_64& rng, std::int64_t max_order, std::size_t max_factors = 3);

/// Each {x, -x} orbit is kept with a random per-set density; never empty.
SubsetMask random_symmetric_subset(std::mt19937_64& rng, const GroupSpec& g);
/// Each element kept with a random per-set density; never empty.
SubsetMask random_subset(std::mt19937_64& rng, const GroupSpec& g);

struct FourierCrosscheck {
  std::int64_t samples = 0;
  std::int64_t odd_samples = 0;
  double max_prob_error = 0;        // |prob_spectral - direct_prob|
  double max_t3_error = 0;          // |t3_spectral - direct_t3|, odd orders
  double max_plancherel = 0;
  double max_inversion = 0;
  double max_imaginary = 0;         // symmetric sets have real spectra
  std::int64_t max_group_order_seen = 0;
};

/// Random symmetric sets over random groups; sample i draws from its own
/// generator seeded by (seed, i), so results do not depend on `threads`.
FourierCrosscheck fourier_crosscheck(std::int64_t samples, std::int64_t max_order, std::uint64_t seed,
                                     unsigned threads = 0);

}  // namespace apx

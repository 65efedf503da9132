#include "apx/crosscheck.hpp"

#include <algorithm>
#include <cmath>

#include "apx/counting.hpp"
#include "apx/errors.hpp"
#include "apx/fourier.hpp"
#include "apx/parallel.hpp"

namespace apx {

GroupSpec random_group(std::mt19937_64& rng, std::int64_t max_order, std::size_t max_factors) {
  if (max_order < 2 || max_factors < 1) throw InvalidArgument("random_group needs max_order >= 2");
  const bool odd = std::uniform_int_distribution<int>(0, 1)(rng) == 1 && max_order >= 3;
  const std::int64_t smallest = odd ? 3 : 2;
  std::size_t factors = std::uniform_int_distribution<std::size_t>(1, max_factors)(rng);
  std::vector<std::int64_t> moduli;
  std::int64_t product = 1;
  for (std::size_t i = 0; i < factors; ++i) {
    // Leave room for the remaining factors at their minimum size.
    std::int64_t reserve = 1;
    for (std::size_t j = i + 1; j < factors; ++j) reserve *= smallest;
    std::int64_t hi = max_order / (product * reserve);
    if (hi < smallest) break;
    std::int64_t m = std::uniform_int_distribution<std::int64_t>(smallest, hi)(rng);
    if (odd && m % 2 == 0) m = m + 1 <= hi ? m + 1 : m - 1;
    moduli.push_back(m);
    product *= m;
  }
  if (moduli.empty()) moduli.push_back(smallest);
  return GroupSpec(std::move(moduli));
}

SubsetMask random_symmetric_subset(std::mt19937_64& rng, const GroupSpec& g) {
  const double density = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  std::bernoulli_distribution keep(density);
  SubsetMask s(g);
  for (Index x = 0; x < g.order(); ++x) {
    Index y = g.neg(x);
    if (y < x) continue;
    if (keep(rng)) {
      s.insert(x);
      s.insert(y);
    }
  }
  if (s.empty()) s.insert(0);
  return s;
}

SubsetMask random_subset(std::mt19937_64& rng, const GroupSpec& g) {
  const double density = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  std::bernoulli_distribution keep(density);
  SubsetMask s(g);
  for (Index x = 0; x < g.order(); ++x) {
    if (keep(rng)) s.insert(x);
  }
  if (s.empty()) s.insert(std::uniform_int_distribution<Index>(0, g.order() - 1)(rng));
  return s;
}

FourierCrosscheck fourier_crosscheck(std::int64_t samples, std::int64_t max_order, std::uint64_t seed,
                                     unsigned threads) {
  if (samples < 1) throw InvalidArgument("fourier crosscheck needs samples >= 1");
  auto parts = parallel_map<FourierCrosscheck>(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    const GroupSpec g = random_group(rng, max_order);
    const SubsetMask s = random_symmetric_subset(rng, g);
    const Spectrum spectrum = dft_indicator(s);

    FourierCrosscheck r;
    r.samples = 1;
    r.max_group_order_seen = g.order();
    r.max_prob_error = std::abs(prob_spectral(s, spectrum) - to_double(direct_prob(s)));
    if (g.odd_order()) {
      r.odd_samples = 1;
      r.max_t3_error = std::abs(t3_spectral(s, spectrum) - static_cast<double>(direct_t3(s)));
    }
    r.max_plancherel = plancherel_residual(s, spectrum);
    r.max_inversion = inversion_residual(s, spectrum);
    r.max_imaginary = max_imaginary(spectrum);
    return r;
  });

  FourierCrosscheck out;
  for (const auto& p : parts) {
    out.samples += p.samples;
    out.odd_samples += p.odd_samples;
    out.max_prob_error = std::max(out.max_prob_error, p.max_prob_error);
    out.max_t3_error = std::max(out.max_t3_error, p.max_t3_error);
    out.max_plancherel = std::max(out.max_plancherel, p.max_plancherel);
    out.max_inversion = std::max(out.max_inversion, p.max_inversion);
    out.max_imaginary = std::max(out.max_imaginary, p.max_imaginary);
    out.max_group_order_seen = std::max(out.max_group_order_seen, p.max_group_order_seen);
  }
  return out;
}

}  // namespace apx

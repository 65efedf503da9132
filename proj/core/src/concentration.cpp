#include "apx/concentration.hpp"

#include <algorithm>

#include "apx/errors.hpp"
#include "apx/parallel.hpp"

namespace apx {

IntWeightSeq::IntWeightSeq(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.size() % 2 == 0) throw InvalidArgument("weight window must have odd length 2R+1");
  for (std::int64_t a : weights_) {
    if (a < 0) throw InvalidArgument("weights must be non-negative");
    total_ += a;
  }
}

IntWeightSeq IntWeightSeq::symmetric_from_half(std::span<const std::int64_t> half) {
  if (half.empty()) throw InvalidArgument("need at least a_0");
  std::vector<std::int64_t> w(half.rbegin(), half.rend());
  w.insert(w.end(), half.begin() + 1, half.end());
  return IntWeightSeq(std::move(w));
}

std::int64_t IntWeightSeq::at(std::int64_t j) const noexcept {
  const std::int64_t r = radius();
  if (j < -r || j > r) return 0;
  return weights_[static_cast<std::size_t>(j + r)];
}

bool IntWeightSeq::symmetric() const noexcept {
  for (std::int64_t j = 1; j <= radius(); ++j) {
    if (at(j) != at(-j)) return false;
  }
  return true;
}

std::int64_t min_product_sum(const IntWeightSeq& seq) {
  const std::int64_t r = seq.radius();
  std::int64_t sum = 0;
  for (std::int64_t i = -r; i <= r; ++i) {
    const std::int64_t ai = seq.at(i);
    if (ai == 0) continue;
    for (std::int64_t j = -r; j <= r; ++j) {
      const std::int64_t aj = seq.at(j);
      const std::int64_t aij = seq.at(i + j);
      sum += std::min({ai * aj, ai * aij, aj * aij});
    }
  }
  return sum;
}

ConcentrationCheck concentration_check(const IntWeightSeq& seq, const Rational& eps) {
  if (!seq.symmetric()) throw SymmetryRequired("concentration check needs a_j = a_{-j}");
  if (seq.total() < 1) throw InvalidArgument("concentration check needs total weight >= 1");
  const std::int64_t d = seq.total();
  ConcentrationCheck c;
  c.lhs = min_product_sum(seq);
  c.rhs = (1 - eps) * d * d;
  c.rhs.canonicalize();
  c.hypothesis = Rational(static_cast<long>(c.lhs)) >= c.rhs;
  c.conclusion = Rational(static_cast<long>(seq.at(0))) >= (1 - eps) * d;
  c.ok = !c.hypothesis || c.conclusion;
  return c;
}

namespace {

/// Calls fn(half) for every (a_1..a_R) with 2 * sum == budget, lexicographic.
template <class Fn>
void for_each_tail(std::vector<std::int64_t>& half, std::size_t pos, std::int64_t remaining, Fn& fn) {
  if (pos == half.size()) {
    if (remaining == 0) fn(half);
    return;
  }
  for (std::int64_t a = 0; 2 * a <= remaining; ++a) {
    half[pos] = a;
    for_each_tail(half, pos + 1, remaining - 2 * a, fn);
  }
  half[pos] = 0;
}

}  // namespace

ConcentrationScan concentration_scan(std::int64_t d_max, std::int64_t radius, const Rational& eps, unsigned threads) {
  if (d_max < 1) throw InvalidArgument("concentration scan needs d_max >= 1");
  if (radius < 0) throw InvalidArgument("concentration scan needs radius >= 0");

  // One task per value of a_0.
  auto parts = parallel_map<ConcentrationScan>(static_cast<std::size_t>(d_max + 1), threads, [&](std::size_t a0) {
    ConcentrationScan part;
    std::vector<std::int64_t> half(static_cast<std::size_t>(radius) + 1, 0);
    half[0] = static_cast<std::int64_t>(a0);
    const std::int64_t max_tail = d_max - static_cast<std::int64_t>(a0);
    // Tails are enumerated in lexicographic order over all totals at once.
    std::vector<std::vector<std::int64_t>> tails;
    for (std::int64_t budget = 0; budget <= max_tail; budget += 2) {
      auto collect = [&](const std::vector<std::int64_t>& h) { tails.push_back(h); };
      if (radius == 0) {
        if (budget == 0) tails.push_back(half);
      } else {
        for_each_tail(half, 1, budget, collect);
      }
    }
    std::sort(tails.begin(), tails.end());
    for (const auto& h : tails) {
      IntWeightSeq seq = IntWeightSeq::symmetric_from_half(h);
      if (seq.total() < 1) continue;
      ConcentrationCheck c = concentration_check(seq, eps);
      ++part.checked;
      if (!c.ok) part.violations.push_back({seq.weights(), seq.total(), c.lhs, c.rhs});
    }
    return part;
  });

  ConcentrationScan out;
  for (auto& part : parts) {
    out.checked += part.checked;
    std::move(part.violations.begin(), part.violations.end(), std::back_inserter(out.violations));
  }
  return out;
}

}  // namespace apx

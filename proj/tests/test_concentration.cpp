#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "apx/concentration.hpp"
#include "apx/errors.hpp"

using namespace apx;

namespace {

// Sum over i, j of min(a_i a_j, a_i a_{i+j}, a_j a_{i+j}), zero outside the window.
std::int64_t min_products(const std::map<std::int64_t, std::int64_t>& a) {
  auto at = [&](std::int64_t k) {
    auto it = a.find(k);
    return it == a.end() ? 0 : it->second;
  };
  std::int64_t sum = 0;
  for (const auto& [i, ai] : a)
    for (const auto& [j, aj] : a) sum += std::min({ai * aj, ai * at(i + j), aj * at(i + j)});
  return sum;
}

std::map<std::int64_t, std::int64_t> as_map(const std::vector<std::int64_t>& w) {
  std::map<std::int64_t, std::int64_t> m;
  const auto radius = static_cast<std::int64_t>(w.size() / 2);
  for (std::size_t i = 0; i < w.size(); ++i) m[static_cast<std::int64_t>(i) - radius] = w[i];
  return m;
}

}  // namespace

TEST(Concentration, TightnessExample) {
  IntWeightSeq seq({3, 3, 3});
  EXPECT_EQ(min_product_sum(seq), 63);
  ConcentrationCheck c = concentration_check(seq, make_rational(2, 9));
  EXPECT_EQ(c.rhs, 63);
  EXPECT_TRUE(c.hypothesis);
  EXPECT_FALSE(c.conclusion);
  EXPECT_FALSE(c.ok);
  // Slightly smaller eps leaves the hypothesis unmet.
  c = concentration_check(seq, make_rational(99, 1000));
  EXPECT_FALSE(c.hypothesis);
  EXPECT_TRUE(c.ok);
}

TEST(Concentration, PointMassIsConcentrated) {
  IntWeightSeq seq({0, 0, 5, 0, 0});
  EXPECT_EQ(seq.radius(), 2);
  EXPECT_EQ(min_product_sum(seq), 25);
  ConcentrationCheck c = concentration_check(seq, make_rational(1, 10));
  EXPECT_TRUE(c.hypothesis);
  EXPECT_TRUE(c.conclusion);
}

TEST(Concentration, MinProductSumMatchesOracle) {
  std::vector<std::vector<std::int64_t>> cases{
      {1, 2, 1}, {0, 4, 0}, {2, 0, 1, 0, 2}, {1, 1, 3, 1, 1}, {5, 0, 0, 2, 0, 0, 5}, {1, 2, 3, 4, 5}};
  for (const auto& w : cases) EXPECT_EQ(min_product_sum(IntWeightSeq(w)), min_products(as_map(w)));
}

TEST(Concentration, SymmetricFromHalf) {
  std::vector<std::int64_t> half{4, 1, 2};
  IntWeightSeq seq = IntWeightSeq::symmetric_from_half(half);
  EXPECT_EQ(seq.weights(), (std::vector<std::int64_t>{2, 1, 4, 1, 2}));
  EXPECT_EQ(seq.total(), 10);
  EXPECT_EQ(seq.at(-2), 2);
  EXPECT_EQ(seq.at(3), 0);
  EXPECT_TRUE(seq.symmetric());
}

TEST(Concentration, Errors) {
  EXPECT_THROW(IntWeightSeq({1, 2}), InvalidArgument);
  EXPECT_THROW(IntWeightSeq({1, -1, 1}), InvalidArgument);
  EXPECT_THROW(concentration_check(IntWeightSeq({1, 2, 3}), make_rational(1, 10)), SymmetryRequired);
  EXPECT_THROW(concentration_check(IntWeightSeq({0, 0, 0}), make_rational(1, 10)), InvalidArgument);
  EXPECT_THROW(concentration_scan(0, 1, make_rational(1, 10)), InvalidArgument);
}

TEST(Concentration, ScanAtTightEpsilonListsScaledTriples) {
  ConcentrationScan scan = concentration_scan(9, 1, make_rational(2, 9), 1);
  // Independent enumeration of (a, b, a) with 1 <= 2a + b <= 9.
  std::int64_t checked = 0;
  std::vector<std::vector<std::int64_t>> expected;
  for (std::int64_t b = 0; b <= 9; ++b)
    for (std::int64_t a = 0; 2 * a + b <= 9; ++a) {
      if (2 * a + b == 0) continue;
      ++checked;
      std::vector<std::int64_t> w{a, b, a};
      const std::int64_t d = 2 * a + b;
      const bool hyp = 9 * min_products(as_map(w)) >= 7 * d * d;
      const bool concl = 9 * b >= 7 * d;
      if (hyp && !concl) expected.push_back(w);
    }
  EXPECT_EQ(scan.checked, checked);
  std::vector<std::vector<std::int64_t>> got;
  for (const auto& v : scan.violations) got.push_back(v.weights);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
  EXPECT_NE(std::find(got.begin(), got.end(), std::vector<std::int64_t>{3, 3, 3}), got.end());
}

TEST(Concentration, ScanBelowTightEpsilonIsClean) {
  ConcentrationScan scan = concentration_scan(10, 2, make_rational(99, 1000), 1);
  EXPECT_GT(scan.checked, 0);
  EXPECT_TRUE(scan.violations.empty());
}

TEST(Concentration, ScanThreadInvariant) {
  ConcentrationScan one = concentration_scan(10, 2, make_rational(2, 9), 1);
  ConcentrationScan many = concentration_scan(10, 2, make_rational(2, 9), 3);
  EXPECT_EQ(one.checked, many.checked);
  ASSERT_EQ(one.violations.size(), many.violations.size());
  for (std::size_t i = 0; i < one.violations.size(); ++i) EXPECT_EQ(one.violations[i].weights, many.violations[i].weights);
}

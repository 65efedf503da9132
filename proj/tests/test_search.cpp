#include <gtest/gtest.h>

#include <algorithm>

#include "apx/counting.hpp"
#include "apx/errors.hpp"
#include "apx/report.hpp"
#include "apx/search.hpp"
#include "oracle.hpp"

using namespace apx;

TEST(Search, SymmetricSubsetCounts) {
  GroupSpec g({12});
  const std::vector<std::int64_t> expected{1, 2, 6, 10, 15, 20, 20, 20, 15, 10, 6, 2, 1};
  std::vector<std::int64_t> by_size(13, 0);
  for (const auto& s : oracle::all_subsets(g))
    if (oracle::symmetric(s)) ++by_size[static_cast<std::size_t>(s.size())];
  EXPECT_EQ(by_size, expected);
  for (std::int64_t d = 0; d <= 12; ++d) {
    EXPECT_EQ(count_symmetric_subsets(g, d), expected[static_cast<std::size_t>(d)]);
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_symmetric_subsets(g, d).size()), expected[static_cast<std::size_t>(d)]);
  }
}

TEST(Search, EnumerationIsExactlyTheSymmetricSets) {
  for (const auto& g : enumerate_abelian_groups(10)) {
    for (std::int64_t d = 1; d <= g.order(); ++d) {
      std::vector<std::uint64_t> got;
      for (const auto& s : enumerate_symmetric_subsets(g, d)) {
        EXPECT_TRUE(oracle::symmetric(s));
        EXPECT_EQ(s.size(), d);
        got.push_back(s.words()[0]);
      }
      std::sort(got.begin(), got.end());
      EXPECT_EQ(std::adjacent_find(got.begin(), got.end()), got.end());
    }
  }
}

namespace {

Rational brute_max_prob(const GroupSpec& g, std::int64_t d) {
  Rational best = -1;
  for (const auto& s : oracle::all_subsets(g))
    if (s.size() == d && oracle::symmetric(s)) best = std::max(best, oracle::prob(s));
  return best;
}

Rational brute_max_t3(const GroupSpec& g, std::int64_t d) {
  Rational best = -1;
  for (const auto& s : oracle::all_subsets(g))
    if (s.size() == d) best = std::max(best, make_rational(oracle::t3(s), d * d));
  return best;
}

}  // namespace

TEST(Search, ProbMaximumMatchesBruteForce) {
  for (const auto& g : enumerate_abelian_groups(10)) {
    for (std::int64_t d = 1; d <= g.order(); ++d) {
      Rational expected = brute_max_prob(g, d);
      SearchOptions canon;
      SearchOptions plain;
      plain.canonicalize = false;
      SearchReport a = extremal_search(g, d, Objective::prob, canon);
      SearchReport b = extremal_search(g, d, Objective::prob, plain);
      if (expected < 0) {
        EXPECT_FALSE(a.max_value.has_value());
        continue;
      }
      ASSERT_TRUE(a.max_value && b.max_value);
      EXPECT_EQ(*a.max_value, expected) << g.to_string() << " d=" << d;
      EXPECT_EQ(*b.max_value, expected);
      EXPECT_EQ(b.pruned_by_canon, 0);
      EXPECT_EQ(a.enumerated, count_symmetric_subsets(g, d));
      EXPECT_TRUE(a.bound_satisfied);
      for (const auto& w : a.witnesses) EXPECT_EQ(direct_prob(w), expected);
      EXPECT_TRUE(std::is_sorted(a.witnesses.begin(), a.witnesses.end(), mask_less));
    }
  }
}

TEST(Search, T3DensityMaximumMatchesBruteForce) {
  for (const auto& g : enumerate_abelian_groups(9)) {
    if (!g.odd_order()) continue;
    for (std::int64_t d = 1; d <= g.order(); ++d) {
      SearchReport r = extremal_search(g, d, Objective::t3density);
      ASSERT_TRUE(r.max_value);
      EXPECT_EQ(*r.max_value, brute_max_t3(g, d)) << g.to_string() << " d=" << d;
      EXPECT_LE(*r.max_value, 1);
    }
  }
}

TEST(Search, SubgroupWitnessAtAlphaZero) {
  SearchReport r = extremal_search(GroupSpec({12}), 4, Objective::prob);
  ASSERT_TRUE(r.max_value);
  EXPECT_EQ(*r.max_value, 1);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].to_string(), "{0,3,6,9}");
}

TEST(Search, ThreadCountDoesNotChangeReports) {
  SearchOptions one;
  SearchOptions many;
  many.threads = 4;
  for (Objective o : {Objective::prob, Objective::t3density}) {
    GroupSpec g = o == Objective::prob ? GroupSpec({2, 8}) : GroupSpec({15});
    for (std::int64_t d : {3, 5, 6}) {
      EXPECT_EQ(to_json(extremal_search(g, d, o, one)), to_json(extremal_search(g, d, o, many)));
    }
  }
}

TEST(Search, WitnessCap) {
  SearchOptions options;
  options.canonicalize = false;
  options.witness_cap = 2;
  SearchReport r = extremal_search(GroupSpec({13}), 4, Objective::prob, options);
  EXPECT_EQ(r.witnesses.size(), 2u);
}

TEST(Search, Errors) {
  EXPECT_THROW(extremal_search(GroupSpec({65}), 3, Objective::prob), InvalidArgument);
  EXPECT_THROW(extremal_search(GroupSpec({8}), 0, Objective::prob), InvalidArgument);
  EXPECT_THROW(extremal_search(GroupSpec({8}), 9, Objective::prob), InvalidArgument);
  EXPECT_THROW(extremal_search(GroupSpec({8}), 3, Objective::t3density), OddOrderRequired);
  EXPECT_THROW(parse_objective("max"), InvalidArgument);
  EXPECT_EQ(parse_objective("t3density"), Objective::t3density);
}

TEST(Suites, SumClosureSmall) {
  SumClosureReport r = verify_sum_closure_bound(12);
  EXPECT_EQ(r.cases, 119);
  EXPECT_TRUE(r.failures.empty());
  ASSERT_TRUE(r.worst_gap);
  EXPECT_EQ(*r.worst_gap, 0);
  for (const auto& c : r.all_cases) {
    EXPECT_EQ(c.max_value, brute_max_prob(c.group, c.d));
    if (c.profile.alpha == 0) EXPECT_EQ(c.gap, 0) << c.group.to_string() << " d=" << c.d;
  }
}

TEST(Suites, ProgressionSmall) {
  ProgressionReport r = verify_progression_bound(9);
  EXPECT_EQ(r.cases, 34);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.empirical_cases, 0);
  EXPECT_LT(r.empirical_gamma1, 1);
  for (const auto& c : r.all_cases) {
    EXPECT_LE(c.max_value, 1);
    if (c.profile.alpha == 0 && c.group.order() % c.d == 0) EXPECT_EQ(c.max_value, 1);
  }
}

TEST(Suites, TriangleBoundSmall) {
  GlsReport r = verify_gls(10);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.cases, r.in_range_cases + r.out_of_range_cases);
  for (const auto& c : r.all_cases) {
    EXPECT_EQ(c.triangles, oracle::triangles(c.set));
    EXPECT_EQ(c.bound, gls_bound(c.group.order(), c.degree));
  }
}

TEST(Suites, BaseCaseSmall) {
  BaseCaseReport r = verify_base_case(12);
  EXPECT_GT(r.sets_checked, 0);
  EXPECT_TRUE(r.failures.empty());
}

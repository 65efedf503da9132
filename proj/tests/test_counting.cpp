#include <gtest/gtest.h>

#include <random>

#include "apx/counting.hpp"
#include "apx/crosscheck.hpp"
#include "apx/errors.hpp"
#include "apx/search.hpp"
#include "oracle.hpp"

using namespace apx;

namespace {

SubsetMask set_of(std::vector<std::int64_t> moduli, std::string_view list) {
  return SubsetMask::from_indices(GroupSpec(std::move(moduli)), parse_index_list(list));
}

}  // namespace

TEST(Counting, WorkedExamples) {
  auto s = set_of({5}, "1,2,3,4");
  EXPECT_EQ(direct_prob(s), make_rational(3, 4));
  EXPECT_EQ(cayley_triangles_direct(s), 10);
  EXPECT_EQ(cayley_triangles_formula(s), 10);
  EXPECT_EQ(direct_t3(s), 12);

  EXPECT_EQ(direct_prob(set_of({6}, "0,2,4")), 1);
  EXPECT_EQ(direct_prob(set_of({7}, "0,1,6")), make_rational(7, 9));
  EXPECT_EQ(direct_t3(set_of({7}, "0,1,2")), 5);
  EXPECT_EQ(sum_pair_count(set_of({7}, "0,1,6")), 7);
}

TEST(Counting, SubgroupsAndCosets) {
  // A subgroup is sum-closed; a coset of a subgroup in odd order is 3AP-full.
  EXPECT_EQ(direct_prob(set_of({3, 3}, "0,1,2")), 1);
  auto coset = set_of({9}, "1,4,7");
  EXPECT_EQ(direct_t3(coset), 9);
  EXPECT_EQ(direct_t3_halving(coset), 9);
}

TEST(Counting, Errors) {
  auto empty = set_of({5}, "");
  EXPECT_THROW(direct_prob(empty), EmptySet);
  EXPECT_EQ(direct_t3(empty), 0);
  EXPECT_THROW(direct_t3_halving(set_of({6}, "1")), HalvingUnavailable);
  EXPECT_THROW(cayley_triangles_direct(set_of({6}, "1,2")), InvalidConnectionSet);
  EXPECT_THROW(cayley_triangles_direct(set_of({6}, "0,1,5")), InvalidConnectionSet);
  EXPECT_THROW(cayley_triangles_formula(set_of({6}, "1,2")), InvalidConnectionSet);
  EXPECT_FALSE(is_connection_set(set_of({6}, "1,2")));
  EXPECT_TRUE(is_connection_set(set_of({6}, "1,5")));
}

TEST(Counting, AllSubsetsMatchOracle) {
  for (const auto& g : enumerate_abelian_groups(9)) {
    for (const auto& s : oracle::all_subsets(g)) {
      EXPECT_EQ(direct_t3(s), oracle::t3(s)) << g.to_string() << ' ' << s.to_string();
      if (s.empty()) continue;
      EXPECT_EQ(direct_prob(s), oracle::prob(s)) << g.to_string() << ' ' << s.to_string();
      if (g.odd_order()) EXPECT_EQ(direct_t3_halving(s), direct_t3(s));
    }
  }
}

TEST(Counting, TrianglesAndZeroIdentityExhaustive) {
  for (const auto& g : enumerate_abelian_groups(10)) {
    for (std::int64_t d = 1; d < g.order(); ++d) {
      for_each_symmetric_subset(
          g, d,
          [&](const SubsetMask& s) {
            const auto direct = cayley_triangles_direct(s);
            EXPECT_EQ(direct, oracle::triangles(s)) << s.to_string();
            EXPECT_EQ(cayley_triangles_formula(s), direct) << s.to_string();
            EXPECT_EQ(prob_from_s0(s), direct_prob(s)) << s.to_string();
          },
          true);
    }
  }
}

TEST(Counting, RandomLargerGroups) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    GroupSpec g = random_group(rng, 40);
    SubsetMask s = random_subset(rng, g);
    EXPECT_EQ(direct_prob(s), oracle::prob(s));
    EXPECT_EQ(direct_t3(s), oracle::t3(s));
  }
}

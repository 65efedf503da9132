#pragma once

#include <cstdint>

#include "apx/rational.hpp"
#include "apx/subset.hpp"

namespace apx {

/// Number of ordered pairs (x, y) in S x S with x + y in S.
std::int64_t sum_pair_count(const SubsetMask& s);

/// Sum-closure probability #{(x,y) in S^2 : x+y in S} / |S|^2.
/// Throws EmptySet for S = {}.
Rational direct_prob(const SubsetMask& s);

/// Number of pairs (x, step) with x, x+step, x+2*step all in S, including
/// step = 0. Valid in any group.
std::int64_t direct_t3(const SubsetMask& s);

/// Sum over x, y in S of 1_S((x+y)/2). Equals direct_t3 in odd-order
/// groups; throws HalvingUnavailable otherwise.
std::int64_t direct_t3_halving(const SubsetMask& s);

/// True when S is a valid Cayley connection set: symmetric and 0 not in S.
bool is_connection_set(const SubsetMask& s);

/// Triangle count of the Cayley graph Cay(G, S), counted on the explicit
/// graph. Throws InvalidConnectionSet unless S is symmetric and 0-free.
std::int64_t cayley_triangles_direct(const SubsetMask& s);

/// n |S|^2 Prob[S] / 6. Throws InvalidConnectionSet as above, and
/// ConsistencyError if the value is not an integer.
Rational cayley_triangles_formula(const SubsetMask& s);

/// Prob[S] recovered from S0 = S u {0}:
///   Prob[S] = (|S0|^2/|S|^2) (Prob[S0] - (3|S|+1)/|S0|^2).
/// Requires a non-empty connection set.
Rational prob_from_s0(const SubsetMask& s);

}  // namespace apx

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apx/bounds.hpp"
#include "apx/group.hpp"
#include "apx/rational.hpp"
#include "apx/subset.hpp"

namespace apx {

/// Largest group order the exhaustive routines accept.
inline constexpr std::int64_t kMaxSearchOrder = 64;

enum class Objective { prob, t3density };
std::string to_string(Objective o);
Objective parse_objective(std::string_view text);

/// Visits every symmetric S with |S| = d exactly once, built from
/// involution-fixed elements (x = -x) and pairs {x, -x}. When `exclude_zero`
/// is set, 0 is never chosen.
void for_each_symmetric_subset(const GroupSpec& g, std::int64_t d, const std::function<void(const SubsetMask&)>& fn,
                               bool exclude_zero = false);
std::vector<SubsetMask> enumerate_symmetric_subsets(const GroupSpec& g, std::int64_t d);

/// sum over f + 2p = d of C(#fixed, f) * C(#pairs, p).
std::int64_t count_symmetric_subsets(const GroupSpec& g, std::int64_t d);

struct SearchOptions {
  bool canonicalize = true;
  std::size_t witness_cap = 10;
  /// Constant branch of the bound. Unset means 949/1000 for prob and 0
  /// (algebraic branches only) for t3density.
  std::optional<Rational> gamma0;
  unsigned threads = 1;
};

struct SearchReport {
  GroupSpec group{{1}};
  std::int64_t size = 0;
  Objective objective = Objective::prob;
  std::optional<Rational> max_value;  // absent when no candidate set exists
  std::vector<SubsetMask> witnesses;  // sorted by mask value, capped
  std::int64_t enumerated = 0;
  std::int64_t pruned_by_canon = 0;
  SizeProfile profile;
  BoundValue bound;
  bool bound_satisfied = true;
};

/// Exact maximum of Prob[S] over symmetric S (objective prob) or of
/// T3(S)/|S|^2 over all S (objective t3density, odd order only) with
/// |S| = d. With canonicalization, only the smallest mask of each orbit
/// under unit dilations (prob) or unit dilations and translations
/// (t3density) is evaluated. Throws OddOrderRequired for t3density on an
/// even-order group and InvalidArgument for d outside [1, n] or
/// n > kMaxSearchOrder.
SearchReport extremal_search(const GroupSpec& g, std::int64_t d, Objective objective,
                             const SearchOptions& options = {});

struct SumClosureCase {
  GroupSpec group{{1}};
  std::int64_t d = 0;
  SizeProfile profile;
  Rational max_value;
  BoundValue bound;
  Rational gap;  // bound - max_value
  SubsetMask witness{GroupSpec{{1}}};
};

struct SumClosureReport {
  std::int64_t cases = 0;
  std::optional<Rational> worst_gap;
  std::vector<SumClosureCase> failures;
  std::vector<SumClosureCase> all_cases;
};

/// For every Abelian group of order <= max_order and every 1 <= d <= n,
/// checks max Prob[S] over symmetric |S| = d against F(q, alpha).
SumClosureReport verify_sum_closure_bound(std::int64_t max_order, const Rational& gamma0 = default_gamma0(),
                                          unsigned threads = 0);

struct ProgressionCase {
  GroupSpec group{{1}};
  std::int64_t d = 0;
  SizeProfile profile;
  Rational max_value;        // max T3/d^2
  Rational algebraic_bound;  // max(term1, term2)
  bool algebraic_pass = false;
  SubsetMask witness{GroupSpec{{1}}};
};

struct ProgressionReport {
  std::int64_t cases = 0;
  std::optional<Rational> worst_gap;  // min over algebraic-regime cases
  /// Least constant making every case pass: the max of max_value over
  /// cases above the algebraic branches, or 0 when there are none.
  Rational empirical_gamma1;
  std::int64_t empirical_cases = 0;
  /// Largest T3/d^2 among cases with alpha != 0 (diagnostic).
  std::optional<Rational> max_density_alpha_nonzero;
  std::vector<ProgressionCase> failures;  // T3/d^2 > 1
  std::vector<ProgressionCase> all_cases;
};

/// Odd-order groups of order <= max_order, all subsets of every size.
ProgressionReport verify_progression_bound(std::int64_t max_order, unsigned threads = 0);

struct GlsCase {
  GroupSpec group{{1}};
  SubsetMask set{GroupSpec{{1}}};
  std::int64_t degree = 0;
  SizeProfile profile;  // of |S u {0}|
  std::int64_t triangles = 0;
  std::int64_t bound = 0;
  bool in_theorem_range = false;  // q >= 7
  bool holds = false;
};

struct GlsReport {
  std::int64_t cases = 0;
  std::int64_t in_range_cases = 0;
  std::int64_t out_of_range_cases = 0;
  std::int64_t out_of_range_holding = 0;
  std::vector<GlsCase> failures;                 // in range and violated
  std::vector<GlsCase> out_of_range_violations;  // logged only
  std::vector<GlsCase> all_cases;
};

/// Every symmetric 0-free S (|S| >= 1) in every group of order <= max_order:
/// Cayley triangle count against the conjectured maximum, asserted when
/// n / |S u {0}| has integer part >= 7 and logged otherwise.
GlsReport verify_gls(std::int64_t max_order, unsigned threads = 0);

struct BaseCaseReport {
  std::int64_t sets_checked = 0;
  std::vector<std::pair<SubsetMask, Rational>> failures;  // (S, Prob[S])
};

/// Every symmetric S with 2|S| > n in every group of order <= max_order:
/// Prob[S] <= 1 - alpha + alpha^2 with (1, alpha) = size profile.
BaseCaseReport verify_base_case(std::int64_t max_order, unsigned threads = 0);

}  // namespace apx

#include "apx/search.hpp"

#include <algorithm>
#include <bit>

#include "apx/counting.hpp"
#include "apx/errors.hpp"
#include "apx/parallel.hpp"

namespace apx {

namespace {

struct Involution {
  std::vector<Index> fixed;                   // x = -x
  std::vector<std::pair<Index, Index>> pairs;  // x < -x
};

Involution involution_orbits(const GroupSpec& g, bool exclude_zero) {
  Involution inv;
  for (Index x = exclude_zero ? 1 : 0; x < g.order(); ++x) {
    Index y = g.neg(x);
    if (y == x) {
      inv.fixed.push_back(x);
    } else if (x < y) {
      inv.pairs.emplace_back(x, y);
    }
  }
  return inv;
}

/// Calls fn(chosen) for every k-subset of [first, n), chosen in increasing
/// order, lexicographically.
template <class Fn>
void for_each_combination(std::size_t first, std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (chosen.size() == k) {
      fn(chosen);
      return;
    }
    for (std::size_t i = start; i + (k - chosen.size()) <= n; ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  if (k <= n - std::min(first, n)) rec(rec, first);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Non-identity automorphism-type maps under which the objective is
/// invariant, as index permutations.
std::vector<std::vector<Index>> symmetry_maps(const GroupSpec& g, Objective objective) {
  std::vector<std::vector<Index>> maps;
  const auto units = unit_scalars(g);
  const Index shifts = objective == Objective::t3density ? g.order() : 1;
  for (std::int64_t u : units) {
    for (Index t = 0; t < shifts; ++t) {
      if (u == 1 && t == 0) continue;
      std::vector<Index> perm(static_cast<std::size_t>(g.order()));
      for (Index x = 0; x < g.order(); ++x) perm[static_cast<std::size_t>(x)] = g.add(g.scale(x, u), t);
      maps.push_back(std::move(perm));
    }
  }
  return maps;
}

bool is_canonical(std::uint64_t mask, const std::vector<std::vector<Index>>& maps) {
  for (const auto& perm : maps) {
    std::uint64_t image = 0;
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
      image |= std::uint64_t{1} << perm[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    if (image < mask) return false;
  }
  return true;
}

struct PartialSearch {
  std::optional<Rational> max_value;
  std::vector<std::uint64_t> witnesses;
  std::int64_t enumerated = 0;
  std::int64_t pruned = 0;
};

struct SearchTask {
  std::uint64_t base = 0;
  std::size_t pick = 0;   // items still to choose
  std::size_t first = 0;  // first eligible item
};

}  // namespace

std::string to_string(Objective o) { return o == Objective::prob ? "prob" : "t3density"; }

Objective parse_objective(std::string_view text) {
  if (text == "prob") return Objective::prob;
  if (text == "t3density" || text == "t3") return Objective::t3density;
  throw InvalidArgument("unknown objective '" + std::string(text) + "' (expected prob|t3density)");
}

void for_each_symmetric_subset(const GroupSpec& g, std::int64_t d, const std::function<void(const SubsetMask&)>& fn,
                               bool exclude_zero) {
  if (d < 0 || d > g.order()) return;
  const Involution inv = involution_orbits(g, exclude_zero);
  for (std::int64_t f = 0; f <= d && f <= static_cast<std::int64_t>(inv.fixed.size()); ++f) {
    if ((d - f) % 2 != 0) continue;
    const auto p = static_cast<std::size_t>((d - f) / 2);
    if (p > inv.pairs.size()) continue;
    for_each_combination(0, inv.fixed.size(), static_cast<std::size_t>(f), [&](const std::vector<std::size_t>& fc) {
      for_each_combination(0, inv.pairs.size(), p, [&](const std::vector<std::size_t>& pc) {
        SubsetMask s(g);
        for (std::size_t i : fc) s.insert(inv.fixed[i]);
        for (std::size_t i : pc) {
          s.insert(inv.pairs[i].first);
          s.insert(inv.pairs[i].second);
        }
        fn(s);
      });
    });
  }
}

std::vector<SubsetMask> enumerate_symmetric_subsets(const GroupSpec& g, std::int64_t d) {
  std::vector<SubsetMask> out;
  for_each_symmetric_subset(g, d, [&](const SubsetMask& s) { out.push_back(s); });
  return out;
}

std::int64_t count_symmetric_subsets(const GroupSpec& g, std::int64_t d) {
  const Involution inv = involution_orbits(g, false);
  const auto fixed = static_cast<std::int64_t>(inv.fixed.size());
  const auto pairs = static_cast<std::int64_t>(inv.pairs.size());
  std::int64_t total = 0;
  for (std::int64_t f = d % 2; f <= d; f += 2) total += binomial(fixed, f) * binomial(pairs, (d - f) / 2);
  return total;
}

SearchReport extremal_search(const GroupSpec& g, std::int64_t d, Objective objective, const SearchOptions& options) {
  const std::int64_t n = g.order();
  if (n > kMaxSearchOrder) {
    throw InvalidArgument("exhaustive search supports order <= " + std::to_string(kMaxSearchOrder));
  }
  if (d < 1 || d > n) throw InvalidArgument("search needs 1 <= d <= n");
  if (objective == Objective::t3density && !g.odd_order()) {
    throw OddOrderRequired("t3density search needs an odd-order group");
  }

  SearchReport report;
  report.group = g;
  report.size = d;
  report.objective = objective;
  report.profile = size_profile(n, d);
  const Rational gamma0 =
      options.gamma0 ? *options.gamma0 : (objective == Objective::prob ? default_gamma0() : Rational(0));
  report.bound = extremal_bound(report.profile.q, report.profile.alpha, gamma0);

  const auto maps = options.canonicalize ? symmetry_maps(g, objective) : std::vector<std::vector<Index>>{};

  // Items are single elements (t3density) or symmetric orbits (prob); each
  // task fixes a prefix and enumerates the remaining choices.
  std::vector<std::uint64_t> items;
  std::vector<SearchTask> tasks;
  if (objective == Objective::prob) {
    const Involution inv = involution_orbits(g, false);
    for (auto [x, y] : inv.pairs) items.push_back((std::uint64_t{1} << x) | (std::uint64_t{1} << y));
    for (std::int64_t f = 0; f <= d && f <= static_cast<std::int64_t>(inv.fixed.size()); ++f) {
      if ((d - f) % 2 != 0 || static_cast<std::size_t>((d - f) / 2) > inv.pairs.size()) continue;
      for_each_combination(0, inv.fixed.size(), static_cast<std::size_t>(f), [&](const std::vector<std::size_t>& fc) {
        std::uint64_t base = 0;
        for (std::size_t i : fc) base |= std::uint64_t{1} << inv.fixed[i];
        tasks.push_back({base, static_cast<std::size_t>((d - f) / 2), 0});
      });
    }
  } else {
    for (Index x = 0; x < n; ++x) items.push_back(std::uint64_t{1} << x);
    for (Index low = 0; low + d <= n; ++low) {
      tasks.push_back({std::uint64_t{1} << low, static_cast<std::size_t>(d - 1), static_cast<std::size_t>(low + 1)});
    }
  }

  const std::int64_t dd = d * d;
  auto parts = parallel_map<PartialSearch>(tasks.size(), options.threads, [&](std::size_t t) {
    PartialSearch part;
    const SearchTask& task = tasks[t];
    for_each_combination(task.first, items.size(), task.pick, [&](const std::vector<std::size_t>& chosen) {
      std::uint64_t mask = task.base;
      for (std::size_t i : chosen) mask |= items[i];
      ++part.enumerated;
      if (options.canonicalize && !is_canonical(mask, maps)) {
        ++part.pruned;
        return;
      }
      const SubsetMask s = SubsetMask::from_bits(g, mask);
      const Rational value = objective == Objective::prob ? direct_prob(s) : make_rational(direct_t3(s), dd);
      if (!part.max_value || value > *part.max_value) {
        part.max_value = value;
        part.witnesses.clear();
      }
      if (value == *part.max_value) part.witnesses.push_back(mask);
    });
    return part;
  });

  std::vector<std::uint64_t> witnesses;
  for (auto& part : parts) {
    report.enumerated += part.enumerated;
    report.pruned_by_canon += part.pruned;
    if (!part.max_value) continue;
    if (!report.max_value || *part.max_value > *report.max_value) {
      report.max_value = part.max_value;
      witnesses.clear();
    }
    if (*part.max_value == *report.max_value) {
      witnesses.insert(witnesses.end(), part.witnesses.begin(), part.witnesses.end());
    }
  }
  std::sort(witnesses.begin(), witnesses.end());
  if (witnesses.size() > options.witness_cap) witnesses.resize(options.witness_cap);
  for (std::uint64_t w : witnesses) report.witnesses.push_back(SubsetMask::from_bits(g, w));
  report.bound_satisfied = !report.max_value || *report.max_value <= report.bound.value;
  return report;
}

namespace {

std::vector<std::pair<GroupSpec, std::int64_t>> group_size_cases(std::int64_t max_order, bool odd_only) {
  std::vector<std::pair<GroupSpec, std::int64_t>> cases;
  for (const GroupSpec& g : enumerate_abelian_groups(max_order)) {
    if (odd_only && !g.odd_order()) continue;
    for (std::int64_t d = 1; d <= g.order(); ++d) cases.emplace_back(g, d);
  }
  return cases;
}

}  // namespace

SumClosureReport verify_sum_closure_bound(std::int64_t max_order, const Rational& gamma0, unsigned threads) {
  if (max_order < 1) throw InvalidArgument("max_order must be >= 1");
  const auto cases = group_size_cases(max_order, false);
  SearchOptions options;
  options.gamma0 = gamma0;
  options.witness_cap = 1;
  auto reports = parallel_map<std::optional<SearchReport>>(cases.size(), threads, [&](std::size_t i) {
    return std::optional<SearchReport>(extremal_search(cases[i].first, cases[i].second, Objective::prob, options));
  });

  SumClosureReport out;
  for (auto& r : reports) {
    if (!r->max_value) continue;
    SumClosureCase c;
    c.group = r->group;
    c.d = r->size;
    c.profile = r->profile;
    c.max_value = *r->max_value;
    c.bound = r->bound;
    c.gap = r->bound.value - c.max_value;
    c.witness = r->witnesses.front();
    ++out.cases;
    if (!out.worst_gap || c.gap < *out.worst_gap) out.worst_gap = c.gap;
    if (c.gap < 0) out.failures.push_back(c);
    out.all_cases.push_back(std::move(c));
  }
  return out;
}

ProgressionReport verify_progression_bound(std::int64_t max_order, unsigned threads) {
  if (max_order < 1) throw InvalidArgument("max_order must be >= 1");
  const auto cases = group_size_cases(max_order, true);
  SearchOptions options;
  options.gamma0 = Rational(0);
  options.witness_cap = 1;
  auto reports = parallel_map<std::optional<SearchReport>>(cases.size(), threads, [&](std::size_t i) {
    return std::optional<SearchReport>(extremal_search(cases[i].first, cases[i].second, Objective::t3density, options));
  });

  ProgressionReport out;
  out.empirical_gamma1 = 0;
  for (auto& r : reports) {
    ProgressionCase c;
    c.group = r->group;
    c.d = r->size;
    c.profile = r->profile;
    c.max_value = *r->max_value;
    c.algebraic_bound = r->bound.term1 > r->bound.term2 ? r->bound.term1 : r->bound.term2;
    c.algebraic_pass = c.max_value <= c.algebraic_bound;
    c.witness = r->witnesses.front();
    ++out.cases;
    if (c.algebraic_pass) {
      Rational gap = c.algebraic_bound - c.max_value;
      if (!out.worst_gap || gap < *out.worst_gap) out.worst_gap = gap;
    } else {
      ++out.empirical_cases;
      if (c.max_value > out.empirical_gamma1) out.empirical_gamma1 = c.max_value;
    }
    if (c.profile.alpha != 0 && (!out.max_density_alpha_nonzero || c.max_value > *out.max_density_alpha_nonzero)) {
      out.max_density_alpha_nonzero = c.max_value;
    }
    if (c.max_value > 1) out.failures.push_back(c);
    out.all_cases.push_back(std::move(c));
  }
  return out;
}

GlsReport verify_gls(std::int64_t max_order, unsigned threads) {
  if (max_order < 1) throw InvalidArgument("max_order must be >= 1");
  const auto cases = group_size_cases(max_order, false);
  auto per_case = parallel_map<std::vector<GlsCase>>(cases.size(), threads, [&](std::size_t i) {
    const auto& [g, degree] = cases[i];
    std::vector<GlsCase> found;
    if (degree >= g.order()) return found;  // 0 is excluded, so |S| <= n - 1
    const SizeProfile profile = size_profile(g.order(), degree + 1);
    const std::int64_t bound = gls_bound(g.order(), degree);
    for_each_symmetric_subset(
        g, degree,
        [&](const SubsetMask& s) {
          GlsCase c;
          c.group = g;
          c.set = s;
          c.degree = degree;
          c.profile = profile;
          c.triangles = cayley_triangles_direct(s);
          c.bound = bound;
          c.in_theorem_range = profile.q >= 7;
          c.holds = c.triangles <= c.bound;
          found.push_back(std::move(c));
        },
        /*exclude_zero=*/true);
    return found;
  });

  GlsReport out;
  for (auto& found : per_case) {
    for (auto& c : found) {
      ++out.cases;
      if (c.in_theorem_range) {
        ++out.in_range_cases;
        if (!c.holds) out.failures.push_back(c);
      } else {
        ++out.out_of_range_cases;
        if (c.holds) {
          ++out.out_of_range_holding;
        } else {
          out.out_of_range_violations.push_back(c);
        }
      }
      out.all_cases.push_back(std::move(c));
    }
  }
  return out;
}

BaseCaseReport verify_base_case(std::int64_t max_order, unsigned threads) {
  if (max_order < 1) throw InvalidArgument("max_order must be >= 1");
  std::vector<std::pair<GroupSpec, std::int64_t>> cases;
  for (const auto& [g, d] : group_size_cases(max_order, false)) {
    if (2 * d > g.order()) cases.emplace_back(g, d);
  }
  auto parts = parallel_map<BaseCaseReport>(cases.size(), threads, [&](std::size_t i) {
    const auto& [g, d] = cases[i];
    const SizeProfile profile = size_profile(g.order(), d);
    const Rational bound = base_case_bound(profile.alpha);
    BaseCaseReport part;
    for_each_symmetric_subset(g, d, [&](const SubsetMask& s) {
      ++part.sets_checked;
      Rational p = direct_prob(s);
      if (p > bound) part.failures.emplace_back(s, p);
    });
    return part;
  });
  BaseCaseReport out;
  for (auto& part : parts) {
    out.sets_checked += part.sets_checked;
    std::move(part.failures.begin(), part.failures.end(), std::back_inserter(out.failures));
  }
  return out;
}

}  // namespace apx

#include "apx/counting.hpp"

#include <bit>

#include "apx/errors.hpp"

namespace apx {

namespace {

void require_connection_set(const SubsetMask& s) {
  if (s.contains(0)) throw InvalidConnectionSet("connection set contains 0");
  if (!s.is_symmetric()) throw InvalidConnectionSet("connection set is not symmetric");
}

}  // namespace

std::int64_t sum_pair_count(const SubsetMask& s) {
  const GroupSpec& g = s.group();
  const auto elems = s.elements();
  std::int64_t count = 0;
  for (Index x : elems) {
    for (Index y : elems) {
      if (s.contains(g.add(x, y))) ++count;
    }
  }
  return count;
}

Rational direct_prob(const SubsetMask& s) {
  if (s.empty()) throw EmptySet("Prob[S] is undefined for the empty set");
  return make_rational(sum_pair_count(s), s.size() * s.size());
}

std::int64_t direct_t3(const SubsetMask& s) {
  // (x, step) <-> (x, y = x + step); the third term is y + (y - x).
  const GroupSpec& g = s.group();
  const auto elems = s.elements();
  std::int64_t count = 0;
  for (Index x : elems) {
    for (Index y : elems) {
      if (s.contains(g.add(y, g.sub(y, x)))) ++count;
    }
  }
  return count;
}

std::int64_t direct_t3_halving(const SubsetMask& s) {
  const GroupSpec& g = s.group();
  if (!g.odd_order()) throw HalvingUnavailable("halving form needs an odd-order group");
  const auto elems = s.elements();
  std::int64_t count = 0;
  for (Index x : elems) {
    for (Index y : elems) {
      if (s.contains(g.halve(g.add(x, y)))) ++count;
    }
  }
  return count;
}

bool is_connection_set(const SubsetMask& s) { return !s.contains(0) && s.is_symmetric(); }

std::int64_t cayley_triangles_direct(const SubsetMask& s) {
  require_connection_set(s);
  const GroupSpec& g = s.group();
  const Index n = g.order();
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);

  // Explicit adjacency rows; each triangle u < v < w is counted once from
  // its lowest edge (u, v) via common neighbours above v.
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) * words, 0);
  auto row = [&](Index v) { return adj.data() + static_cast<std::size_t>(v) * words; };
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      if (s.contains(g.sub(u, v))) row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }

  std::int64_t triangles = 0;
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      if (!((row(u)[v >> 6] >> (v & 63)) & 1u)) continue;
      for (std::size_t w = static_cast<std::size_t>(v >> 6); w < words; ++w) {
        std::uint64_t common = row(u)[w] & row(v)[w];
        if (w == static_cast<std::size_t>(v >> 6)) {
          int shift = static_cast<int>(v & 63) + 1;
          common = shift == 64 ? 0 : common & (~std::uint64_t{0} << shift);
        }
        triangles += std::popcount(common);
      }
    }
  }
  return triangles;
}

Rational cayley_triangles_formula(const SubsetMask& s) {
  require_connection_set(s);
  if (s.empty()) return Rational(0);
  const std::int64_t d = s.size();
  Rational value = Rational(s.group().order()) * Rational(d * d) * direct_prob(s) / 6;
  value.canonicalize();
  if (value.get_den() != 1) {
    throw ConsistencyError("triangle formula produced a non-integer " + to_string(value) + " for " + s.to_string());
  }
  return value;
}

Rational prob_from_s0(const SubsetMask& s) {
  require_connection_set(s);
  if (s.empty()) throw EmptySet("Prob[S] is undefined for the empty set");
  SubsetMask s0 = s;
  s0.insert(0);
  const std::int64_t d = s.size();
  const std::int64_t d0 = s0.size();
  Rational value = Rational(d0 * d0) / Rational(d * d) * (direct_prob(s0) - make_rational(3 * d + 1, d0 * d0));
  value.canonicalize();
  return value;
}

}  // namespace apx

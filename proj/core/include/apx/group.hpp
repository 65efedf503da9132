#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apx {

/// Mixed-radix index of a group element, in [0, order).
using Index = std::int64_t;

/// Coordinates of an element of Z_{n1} x ... x Z_{nr}.
struct Element {
  std::vector<std::int64_t> coords;

  friend bool operator==(const Element&, const Element&) = default;
};

/// A finite Abelian group presented as a product of cyclic groups.
///
/// Elements are indexed mixed-radix with the first coordinate varying
/// fastest: index(x1,...,xr) = x1 + n1*(x2 + n2*(x3 + ...)). Every module
/// (subsets, spectra, search) shares this index space.
class GroupSpec {
 public:
  /// Throws InvalidArgument on an empty list, a modulus < 1, or an order
  /// that overflows the index type.
  explicit GroupSpec(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::int64_t order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  bool odd_order() const noexcept { return order_ % 2 == 1; }
  /// lcm of the moduli.
  std::int64_t exponent() const noexcept { return exponent_; }

  Index encode(std::span<const std::int64_t> coords) const;
  Element decode(Index index) const;
  bool valid(const Element& e) const noexcept;

  // Index-level group law; arguments are assumed in range.
  Index add(Index a, Index b) const noexcept;
  Index sub(Index a, Index b) const noexcept;
  Index neg(Index a) const noexcept;
  Index scale(Index a, std::int64_t u) const noexcept;
  /// The unique b with b + b = a. Throws HalvingUnavailable for even order.
  Index halve(Index a) const;

  /// Comma-separated moduli, e.g. "3,5".
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept {
    return a.moduli_ == b.moduli_;
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

GroupSpec make_group(std::vector<std::int64_t> moduli);

/// Parses "15" or "3,5". Throws InvalidArgument on malformed text.
GroupSpec parse_group(std::string_view text);

/// Coordinate-wise operations on explicit elements; reject out-of-range
/// coordinates with InvalidArgument.
Element add(const GroupSpec& g, const Element& a, const Element& b);
Element neg(const GroupSpec& g, const Element& a);
Element halve(const GroupSpec& g, const Element& a);

/// One representative per isomorphism class for every order 1..max_order,
/// in invariant-factor form (largest factor first, each divisible by the
/// next). Within an order, presentations are sorted lexicographically
/// descending, so the cyclic group comes first.
std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t max_order);

/// Scalars u in [1, exponent) coprime to the exponent; x -> u*x is an
/// automorphism for each of them.
std::vector<std::int64_t> unit_scalars(const GroupSpec& g);

}  // namespace apx

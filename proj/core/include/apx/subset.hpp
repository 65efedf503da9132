#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "apx/group.hpp"

namespace apx {

/// Membership bitset over the elements of a group, with cached cardinality.
class SubsetMask {
 public:
  explicit SubsetMask(GroupSpec group);

  /// Throws InvalidArgument for indices outside [0, order).
  static SubsetMask from_indices(GroupSpec group, std::span<const Index> indices);
  /// Bit i of `bits` is element i; requires order <= 64.
  static SubsetMask from_bits(GroupSpec group, std::uint64_t bits);
  static SubsetMask full(GroupSpec group);

  const GroupSpec& group() const noexcept { return group_; }
  std::int64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(Index x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Index x);
  void erase(Index x);

  /// Sorted member indices.
  std::vector<Index> elements() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  /// S = -S.
  bool is_symmetric() const;

  /// Sorted index list, e.g. "{1,2,4}".
  std::string to_string() const;

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) noexcept {
    return a.group_ == b.group_ && a.words_ == b.words_;
  }

 private:
  GroupSpec group_;
  std::vector<std::uint64_t> words_;
  std::int64_t size_ = 0;
};

/// Orders masks by their value as unsigned integers (element i at bit i).
bool mask_less(const SubsetMask& a, const SubsetMask& b) noexcept;

/// Parses "1,2,4" or "{1,2,4}" into indices; "{}" or "" is the empty set.
std::vector<Index> parse_index_list(std::string_view text);

SubsetMask translate(const SubsetMask& s, Index t);
SubsetMask dilate(const SubsetMask& s, std::int64_t u);
SubsetMask negate(const SubsetMask& s);

}  // namespace apx

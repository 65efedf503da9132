#include "apx/subset.hpp"

#include <bit>
#include <charconv>

#include "apx/errors.hpp"

namespace apx {

SubsetMask::SubsetMask(GroupSpec group)
    : group_(std::move(group)), words_(static_cast<std::size_t>((group_.order() + 63) / 64), 0) {}

SubsetMask SubsetMask::from_indices(GroupSpec group, std::span<const Index> indices) {
  SubsetMask s(std::move(group));
  for (Index x : indices) s.insert(x);
  return s;
}

SubsetMask SubsetMask::from_bits(GroupSpec group, std::uint64_t bits) {
  if (group.order() > 64) throw InvalidArgument("from_bits needs order <= 64");
  if (group.order() < 64 && (bits >> group.order()) != 0) {
    throw InvalidArgument("bits set beyond the group order");
  }
  SubsetMask s(std::move(group));
  s.words_[0] = bits;
  s.size_ = std::popcount(bits);
  return s;
}

SubsetMask SubsetMask::full(GroupSpec group) {
  SubsetMask s(std::move(group));
  for (Index x = 0; x < s.group_.order(); ++x) s.insert(x);
  return s;
}

void SubsetMask::insert(Index x) {
  if (x < 0 || x >= group_.order()) {
    throw InvalidArgument("index " + std::to_string(x) + " out of range for group " + group_.to_string());
  }
  auto& w = words_[x >> 6];
  std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void SubsetMask::erase(Index x) {
  if (x < 0 || x >= group_.order()) {
    throw InvalidArgument("index " + std::to_string(x) + " out of range for group " + group_.to_string());
  }
  auto& w = words_[x >> 6];
  std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

std::vector<Index> SubsetMask::elements() const {
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<Index>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool SubsetMask::is_symmetric() const {
  for (Index x : elements()) {
    if (!contains(group_.neg(x))) return false;
  }
  return true;
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Index x : elements()) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

bool mask_less(const SubsetMask& a, const SubsetMask& b) noexcept {
  const auto& wa = a.words();
  const auto& wb = b.words();
  if (wa.size() != wb.size()) return wa.size() < wb.size();
  for (std::size_t i = wa.size(); i-- > 0;) {
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  }
  return false;
}

std::vector<Index> parse_index_list(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw InvalidArgument("unbalanced braces in set '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<Index> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Index value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidArgument("malformed index list '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SubsetMask translate(const SubsetMask& s, Index t) {
  SubsetMask out(s.group());
  for (Index x : s.elements()) out.insert(s.group().add(x, t));
  return out;
}

SubsetMask dilate(const SubsetMask& s, std::int64_t u) {
  SubsetMask out(s.group());
  for (Index x : s.elements()) out.insert(s.group().scale(x, u));
  return out;
}

SubsetMask negate(const SubsetMask& s) {
  SubsetMask out(s.group());
  for (Index x : s.elements()) out.insert(s.group().neg(x));
  return out;
}

}  // namespace apx

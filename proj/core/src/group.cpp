#include "apx/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "apx/errors.hpp"

namespace apx {

namespace {
__extension__ typedef __int128 wide_int;
}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InvalidArgument("group needs at least one modulus");
  order_ = 1;
  exponent_ = 1;
  for (std::int64_t m : moduli_) {
    if (m < 1) throw InvalidArgument("modulus must be >= 1, got " + std::to_string(m));
    if (__builtin_mul_overflow(order_, m, &order_)) {
      throw InvalidArgument("group order overflows the index range");
    }
    exponent_ = std::lcm(exponent_, m);
  }
}

Index GroupSpec::encode(std::span<const std::int64_t> coords) const {
  if (coords.size() != moduli_.size()) {
    throw InvalidArgument("element has " + std::to_string(coords.size()) + " coordinates, group has rank " +
                          std::to_string(moduli_.size()));
  }
  Index index = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    if (coords[i] < 0 || coords[i] >= moduli_[i]) {
      throw InvalidArgument("coordinate " + std::to_string(coords[i]) + " out of range for modulus " +
                            std::to_string(moduli_[i]));
    }
    index = index * moduli_[i] + coords[i];
  }
  return index;
}

Element GroupSpec::decode(Index index) const {
  if (index < 0 || index >= order_) {
    throw InvalidArgument("index " + std::to_string(index) + " out of range for order " + std::to_string(order_));
  }
  Element e;
  e.coords.reserve(moduli_.size());
  for (std::int64_t m : moduli_) {
    e.coords.push_back(index % m);
    index /= m;
  }
  return e;
}

bool GroupSpec::valid(const Element& e) const noexcept {
  if (e.coords.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (e.coords[i] < 0 || e.coords[i] >= moduli_[i]) return false;
  }
  return true;
}

Index GroupSpec::add(Index a, Index b) const noexcept {
  if (moduli_.size() == 1) {
    Index s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  Index result = 0;
  Index place = 1;
  for (std::int64_t m : moduli_) {
    std::int64_t s = a % m + b % m;
    if (s >= m) s -= m;
    result += s * place;
    place *= m;
    a /= m;
    b /= m;
  }
  return result;
}

Index GroupSpec::neg(Index a) const noexcept {
  if (moduli_.size() == 1) return a == 0 ? 0 : order_ - a;
  Index result = 0;
  Index place = 1;
  for (std::int64_t m : moduli_) {
    std::int64_t x = a % m;
    result += (x == 0 ? 0 : m - x) * place;
    place *= m;
    a /= m;
  }
  return result;
}

Index GroupSpec::sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

Index GroupSpec::scale(Index a, std::int64_t u) const noexcept {
  Index result = 0;
  Index place = 1;
  for (std::int64_t m : moduli_) {
    std::int64_t x = a % m;
    std::int64_t um = ((u % m) + m) % m;
    result += static_cast<std::int64_t>((static_cast<wide_int>(x) * um) % m) * place;
    place *= m;
    a /= m;
  }
  return result;
}

Index GroupSpec::halve(Index a) const {
  Index result = 0;
  Index place = 1;
  for (std::int64_t m : moduli_) {
    if (m % 2 == 0) throw HalvingUnavailable("halving needs every modulus odd; found " + std::to_string(m));
    std::int64_t x = a % m;
    // (m+1)/2 is the inverse of 2 modulo an odd m.
    result += static_cast<std::int64_t>((static_cast<wide_int>(x) * ((m + 1) / 2)) % m) * place;
    place *= m;
    a /= m;
  }
  return result;
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

GroupSpec make_group(std::vector<std::int64_t> moduli) { return GroupSpec(std::move(moduli)); }

GroupSpec parse_group(std::string_view text) {
  std::vector<std::int64_t> moduli;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidArgument("malformed group '" + std::string(text) + "'");
    }
    moduli.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return GroupSpec(std::move(moduli));
}

namespace {

void require_valid(const GroupSpec& g, const Element& e) {
  if (!g.valid(e)) throw InvalidArgument("element is not valid for group " + g.to_string());
}

std::vector<std::vector<int>> partitions(int n, int largest) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int part = std::min(n, largest); part >= 1; --part) {
    for (auto& rest : partitions(n - part, part)) {
      rest.insert(rest.begin(), part);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> factors;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

}  // namespace

Element add(const GroupSpec& g, const Element& a, const Element& b) {
  require_valid(g, a);
  require_valid(g, b);
  Element out;
  for (std::size_t i = 0; i < g.rank(); ++i) out.coords.push_back((a.coords[i] + b.coords[i]) % g.moduli()[i]);
  return out;
}

Element neg(const GroupSpec& g, const Element& a) {
  require_valid(g, a);
  Element out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::int64_t m = g.moduli()[i];
    out.coords.push_back((m - a.coords[i]) % m);
  }
  return out;
}

Element halve(const GroupSpec& g, const Element& a) {
  require_valid(g, a);
  return g.decode(g.halve(g.encode(a.coords)));
}

std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t max_order) {
  if (max_order < 1) throw InvalidArgument("max_order must be >= 1");
  std::vector<GroupSpec> out;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    auto factors = factorize(n);
    // Start with the single presentation of Z_1, then multiply in each
    // primary component's partition choices.
    std::vector<std::vector<std::int64_t>> presentations{{}};
    for (auto [p, e] : factors) {
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& base : presentations) {
        for (const auto& part : partitions(e, e)) {
          auto factorsv = base;
          if (factorsv.size() < part.size()) factorsv.resize(part.size(), 1);
          for (std::size_t i = 0; i < part.size(); ++i) {
            for (int k = 0; k < part[i]; ++k) factorsv[i] *= p;
          }
          next.push_back(std::move(factorsv));
        }
      }
      presentations = std::move(next);
    }
    std::sort(presentations.begin(), presentations.end(), std::greater<>());
    for (auto& moduli : presentations) {
      if (moduli.empty()) moduli.push_back(1);
      out.emplace_back(std::move(moduli));
    }
  }
  return out;
}

std::vector<std::int64_t> unit_scalars(const GroupSpec& g) {
  std::vector<std::int64_t> units;
  std::int64_t e = g.exponent();
  if (e == 1) return {1};
  for (std::int64_t u = 1; u < e; ++u) {
    if (std::gcd(u, e) == 1) units.push_back(u);
  }
  return units;
}

}  // namespace apx

#include "vcgroup/subset.hpp"

#include <algorithm>
#include <bit>

#include "vcgroup/error.hpp"

namespace vcgroup {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Subset::Subset(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

Subset::Subset(std::size_t universe, std::initializer_list<Element> elements)
    : Subset(universe, std::vector<Element>(elements)) {}

Subset::Subset(std::size_t universe, const std::vector<Element>& elements)
    : Subset(universe) {
  for (Element x : elements) {
    if (x >= universe) {
      throw Error(Errc::dimension, "element " + std::to_string(x) +
                                       " outside universe of size " +
                                       std::to_string(universe));
    }
    insert(x);
  }
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.clear_tail();
  return s;
}

Subset Subset::from_hex(std::size_t universe, std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw Error(Errc::parse, "empty hex set literal");
  Subset s(universe);
  // The last character holds elements 0..3.
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const int v = hex_value(hex[hex.size() - 1 - i]);
    if (v < 0) {
      throw Error(Errc::parse, "bad hex digit in set literal '" +
                                   std::string(hex) + "'");
    }
    for (int b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      const std::size_t x = 4 * i + static_cast<std::size_t>(b);
      if (x >= universe) {
        throw Error(Errc::dimension, "set literal '" + std::string(hex) +
                                         "' names element " + std::to_string(x) +
                                         " outside a universe of size " +
                                         std::to_string(universe));
      }
      s.insert(static_cast<Element>(x));
    }
  }
  return s;
}

std::string Subset::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (universe_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t i = 0; i < digits; ++i) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t x = 4 * i + b;
      if (x < universe_ && contains(static_cast<Element>(x))) v |= 1U << b;
    }
    out[digits - 1 - i] = kDigits[v];
  }
  return out;
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void Subset::require_same_universe(const Subset& other) const {
  if (universe_ != other.universe_) {
    throw Error(Errc::dimension, "subsets over universes of size " +
                                     std::to_string(universe_) + " and " +
                                     std::to_string(other.universe_));
  }
}

void Subset::clear_tail() {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

bool Subset::intersects(const Subset& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

Subset& Subset::operator|=(const Subset& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Subset Subset::complement() const {
  Subset s = *this;
  for (auto& w : s.words_) w = ~w;
  s.clear_tail();
  return s;
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  return a.words_ <=> b.words_;
}

Subset inverse_set(const FiniteGroup& g, const Subset& a) {
  if (a.universe() != g.order()) {
    throw Error(Errc::dimension, "subset sized " + std::to_string(a.universe()) +
                                     " for group " + g.descriptor());
  }
  Subset out(g.order());
  a.for_each([&](Element x) { out.insert(g.inv(x)); });
  return out;
}

}  // namespace vcgroup

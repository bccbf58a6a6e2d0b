#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "vcgroup/group.hpp"

namespace vcgroup {

/// A subset of a group's element indices, stored as a bit-vector.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe);
  Subset(std::size_t universe, std::initializer_list<Element> elements);
  Subset(std::size_t universe, const std::vector<Element>& elements);

  static Subset full(std::size_t universe);

  // Parses a lowercase hex bit-string; bit x of the number is element x.
  static Subset from_hex(std::size_t universe, std::string_view hex);
  std::string to_hex() const;

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  bool contains(Element x) const {
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }
  void insert(Element x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Element x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  bool intersects(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  Subset complement() const;

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  /// Members in ascending index order.
  std::vector<Element> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
        f(static_cast<Element>(w * 64 + static_cast<unsigned>(__builtin_ctzll(bits))));
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  void require_same_universe(const Subset& other) const;
  void clear_tail();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Set-builder helpers over a group.
Subset inverse_set(const FiniteGroup& g, const Subset& a);

}  // namespace vcgroup

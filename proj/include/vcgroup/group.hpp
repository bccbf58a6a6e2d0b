#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vcgroup {

using Element = std::uint32_t;

// Largest group order any constructor accepts.
inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 20;

namespace detail {
struct GroupImpl;
}

/// A finite group on the dense index set [0, order()).
///
/// Structured families (cyclic, dihedral, direct products) compute the
/// product on the fly; groups read from a Cayley table store it. Values are
/// immutable and cheap to copy, so they may be shared between threads.
class FiniteGroup {
 public:
  std::size_t order() const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element identity() const;
  const std::string& descriptor() const;

  // Known from construction for cyclic groups and products of abelian
  // groups; decided by scanning the table otherwise (exhaustive up to 2048
  // elements, 10^5 sampled pairs beyond).
  bool is_abelian() const;

  friend FiniteGroup make_cyclic(std::size_t n);
  friend FiniteGroup make_dihedral(std::size_t n);
  friend FiniteGroup make_direct_product(const FiniteGroup& g,
                                         const FiniteGroup& h);
  friend FiniteGroup from_cayley_table(
      const std::vector<std::vector<Element>>& table);

 private:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupImpl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const detail::GroupImpl> impl_;
};

/// Z/nZ under addition.
FiniteGroup make_cyclic(std::size_t n);

/// Dihedral group of order 2n: indices [0,n) are rotations r^i and
/// [n,2n) are reflections s*r^i, with s*r = r^-1*s.
FiniteGroup make_dihedral(std::size_t n);

/// g x h, with the pair (a,b) stored at index a*|h| + b.
FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Validates the table against every group axiom and wraps it.
FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table);

/// Reads the text format: N on the first line, then N rows of N indices.
FiniteGroup read_cayley_table(std::istream& in);
FiniteGroup read_cayley_table_file(const std::string& path);
void write_cayley_table(std::ostream& out, const FiniteGroup& g);

/// Parses descriptors such as "C12", "D5", "C3xC4" or "D3xC2".
FiniteGroup make_group(const std::string& descriptor);

enum class GroupAxiom { closure, latin_square, identity, inverse, associativity };

struct AxiomViolation {
  GroupAxiom axiom;
  Element a = 0, b = 0, c = 0;  // witness; unused slots are zero
  std::string message() const;
};

/// Checks closure, the Latin-square property, identity, inverses and
/// associativity of an arbitrary operation table. Associativity is checked
/// exhaustively up to 64 elements and on 10^5 sampled triples beyond.
std::optional<AxiomViolation> check_table(
    const std::vector<std::vector<Element>>& table);

/// Same checks against a constructed group's own operation.
std::optional<AxiomViolation> check_axioms(const FiniteGroup& g);

}  // namespace vcgroup

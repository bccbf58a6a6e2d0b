#pragma once

#include <iosfwd>
#include <vector>

#include "vcgroup/group.hpp"
#include "vcgroup/set_system.hpp"
#include "vcgroup/subset.hpp"

namespace vcgroup {

/// Directed graph on vertices [0, N) with loops allowed and at most one edge
/// per ordered pair. A pair of opposite edges u->v, v->u is not a multi-edge.
class Digraph {
 public:
  explicit Digraph(std::size_t vertex_count);

  std::size_t vertex_count() const { return out_.size(); }
  void add_edge(Element from, Element to);
  bool has_edge(Element from, Element to) const;
  const Subset& out_neighbors(Element v) const { return out_.at(v); }
  std::size_t edge_count() const;
  bool is_symmetric() const;

 private:
  std::vector<Subset> out_;
};

/// u -> v iff v = u*x for some x in a.
Digraph cayley_digraph(const FiniteGroup& g, const Subset& a);

/// For abelian g: x ~ y iff x*y in a, stored as a symmetric digraph (a loop
/// at x when x*x is in a).
Digraph cayley_sum_graph(const FiniteGroup& g, const Subset& a);

/// {N(v)} with N(v) the open out-neighbourhood.
TranslateFamily neighborhood_family(const Digraph& d);

/// {N(v) ∪ {v}}.
TranslateFamily closed_neighborhood_family(const Digraph& d);

/// One line per vertex, "v: w1 w2 ...", neighbours ascending.
void write_adjacency(std::ostream& out, const Digraph& d);
Digraph read_adjacency(std::istream& in);

}  // namespace vcgroup

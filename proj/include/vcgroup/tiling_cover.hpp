#pragma once

#include <vector>

#include "vcgroup/group.hpp"
#include "vcgroup/subset.hpp"

namespace vcgroup {

/// Representatives s_1..s_l whose left translates s_i U are pairwise
/// disjoint, in the order they were accepted.
struct Packing {
  std::vector<Element> reps;
  Subset probe;

  std::size_t size() const { return reps.size(); }
  /// N / k^2 for k = |probe|; every maximal packing reaches it.
  double guaranteed_size(std::size_t group_order) const;
};

/// Representatives t_1..t_m with S t_1 ∪ ... ∪ S t_m = G.
struct Cover {
  std::vector<Element> reps;
  Subset base;

  std::size_t size() const { return reps.size(); }
  /// (N / l)(ln l + 1) for l = |base|.
  double guaranteed_size(std::size_t group_order) const;
};

/// {x*y : x in a, y in b}.
Subset product_set(const FiniteGroup& g, const Subset& a, const Subset& b);

/// Greedy maximal packing: scans s in ascending index order and keeps s
/// whenever sU misses every translate kept so far. The result is maximal, so
/// G = S U U^-1 and l >= N/k^2; both are checked before returning.
Packing greedy_disjoint_translates(const FiniteGroup& g, const Subset& u);

/// Greedy cover of G by right translates S t: each step takes the t that
/// covers the most uncovered elements, smallest index on ties. The result is
/// checked against full coverage and the (N/l)(ln l + 1) bound.
Cover greedy_cover(const FiniteGroup& g, const Subset& s);

/// Abelian groups only: with S the greedy packing of U and V = U U^-1, the
/// set T = V^-1 satisfies S T = G and |T| <= k^2. `base` of the result is S.
Cover abelian_cover_shortcut(const FiniteGroup& g, const Subset& u);

/// Pairwise disjointness of the translates s U, s in reps.
bool translates_disjoint(const FiniteGroup& g, const Subset& u,
                         const std::vector<Element>& reps);

/// No g outside reps has gU disjoint from every chosen translate.
bool packing_is_maximal(const FiniteGroup& g, const Packing& packing);

/// S t_1 ∪ ... ∪ S t_m as a subset.
Subset covered_by(const FiniteGroup& g, const Subset& s,
                  const std::vector<Element>& reps);

}  // namespace vcgroup

#include "vcgroup/tiling_cover.hpp"

#include <cmath>
#include <stdexcept>

#include "vcgroup/error.hpp"
#include "vcgroup/set_system.hpp"

namespace vcgroup {

namespace {

void require_sized(const FiniteGroup& g, const Subset& a) {
  if (a.universe() != g.order()) {
    throw Error(Errc::dimension, "subset sized " + std::to_string(a.universe()) +
                                     " for group " + g.descriptor());
  }
}

// Relative slack for comparing an integer count against a real bound.
constexpr double kBoundSlack = 1e-12;

}  // namespace

double Packing::guaranteed_size(std::size_t group_order) const {
  const double k = static_cast<double>(probe.count());
  return static_cast<double>(group_order) / (k * k);
}

double Cover::guaranteed_size(std::size_t group_order) const {
  const double l = static_cast<double>(base.count());
  return static_cast<double>(group_order) / l * (std::log(l) + 1.0);
}

Subset product_set(const FiniteGroup& g, const Subset& a, const Subset& b) {
  require_sized(g, a);
  require_sized(g, b);
  Subset out(g.order());
  const std::vector<Element> right = b.elements();
  a.for_each([&](Element x) {
    for (Element y : right) out.insert(g.mul(x, y));
  });
  return out;
}

bool translates_disjoint(const FiniteGroup& g, const Subset& u,
                         const std::vector<Element>& reps) {
  Subset seen(g.order());
  for (Element s : reps) {
    Subset t = left_translate(g, s, u);
    if (t.intersects(seen)) return false;
    seen |= t;
  }
  return true;
}

bool packing_is_maximal(const FiniteGroup& g, const Packing& packing) {
  Subset used(g.order());
  Subset chosen(g.order());
  for (Element s : packing.reps) {
    used |= left_translate(g, s, packing.probe);
    chosen.insert(s);
  }
  for (Element x = 0; x < g.order(); ++x) {
    if (chosen.contains(x)) continue;
    if (!left_translate(g, x, packing.probe).intersects(used)) return false;
  }
  return true;
}

Packing greedy_disjoint_translates(const FiniteGroup& g, const Subset& u) {
  require_sized(g, u);
  if (u.empty()) throw Error(Errc::precondition, "cannot pack the empty set");

  const std::vector<Element> probe = u.elements();
  Packing packing{{}, u};
  Subset occupied(g.order());
  for (Element s = 0; s < g.order(); ++s) {
    bool free = true;
    for (Element x : probe) {
      if (occupied.contains(g.mul(s, x))) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    packing.reps.push_back(s);
    for (Element x : probe) occupied.insert(g.mul(s, x));
  }

  // Maximality gives G = S·V with V = U U^-1 and |V| <= k^2.
  const std::size_t k = probe.size();
  if (packing.size() * k * k < g.order()) {
    throw std::logic_error("packing of size " + std::to_string(packing.size()) +
                           " is below N/k^2");
  }
  return packing;
}

Cover greedy_cover(const FiniteGroup& g, const Subset& s) {
  require_sized(g, s);
  if (s.empty()) throw Error(Errc::precondition, "the empty set covers nothing");

  const std::size_t n = g.order();
  const std::vector<Element> base = s.elements();
  std::vector<Element> base_inv;
  for (Element x : base) base_inv.push_back(g.inv(x));

  // gain[t] = |S t \ covered|. An element x lies in S t exactly for the |S|
  // choices t = s^-1 x, so covering x lowers those gains by one.
  std::vector<std::size_t> gain(n, base.size());
  Subset covered(n);
  std::size_t remaining = n;
  Cover cover{{}, s};
  while (remaining > 0) {
    Element best = 0;
    for (Element t = 1; t < n; ++t) {
      if (gain[t] > gain[best]) best = t;
    }
    if (gain[best] == 0) throw std::logic_error("greedy cover stalled");
    cover.reps.push_back(best);
    for (Element x : base) {
      const Element y = g.mul(x, best);
      if (covered.contains(y)) continue;
      covered.insert(y);
      --remaining;
      for (Element xi : base_inv) --gain[g.mul(xi, y)];
    }
  }

  const double bound = cover.guaranteed_size(n);
  if (static_cast<double>(cover.size()) > bound * (1.0 + kBoundSlack)) {
    throw std::logic_error("greedy cover of size " + std::to_string(cover.size()) +
                           " exceeds (N/l)(ln l + 1)");
  }
  return cover;
}

Cover abelian_cover_shortcut(const FiniteGroup& g, const Subset& u) {
  require_sized(g, u);
  if (!g.is_abelian()) {
    throw Error(Errc::precondition,
                "the inverse-difference cover needs an abelian group, got " +
                    g.descriptor());
  }
  const Packing packing = greedy_disjoint_translates(g, u);
  const Subset v = product_set(g, u, inverse_set(g, u));
  const Subset t = inverse_set(g, v);
  const Subset s(g.order(), packing.reps);

  Cover cover{t.elements(), s};
  const std::size_t k = u.count();
  if (cover.size() > k * k) {
    throw std::logic_error("|V^-1| exceeds k^2");
  }
  if (product_set(g, s, t) != Subset::full(g.order())) {
    throw std::logic_error("S V^-1 does not cover the group");
  }
  return cover;
}

Subset covered_by(const FiniteGroup& g, const Subset& s,
                  const std::vector<Element>& reps) {
  require_sized(g, s);
  Subset out(g.order());
  s.for_each([&](Element x) {
    for (Element t : reps) out.insert(g.mul(x, t));
  });
  return out;
}

}  // namespace vcgroup

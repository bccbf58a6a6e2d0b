#include "vcgroup/set_system.hpp"

#include <algorithm>
#include <bit>

#include "vcgroup/error.hpp"

namespace vcgroup {

TranslateFamily TranslateFamily::left_translates(FiniteGroup g, Subset base) {
  if (base.universe() != g.order()) {
    throw Error(Errc::dimension, "base set sized " +
                                     std::to_string(base.universe()) +
                                     " for group " + g.descriptor());
  }
  TranslateFamily f;
  f.kind_ = FamilyKind::left_translates;
  f.ground_size_ = g.order();
  f.group_ = std::move(g);
  f.base_ = std::move(base);
  return f;
}

TranslateFamily TranslateFamily::from_members(std::size_t ground_size,
                                              std::vector<Subset> members,
                                              FamilyKind kind) {
  if (kind == FamilyKind::left_translates) {
    throw Error(Errc::precondition,
                "left-translate families are built from a group and base set");
  }
  for (const auto& m : members) {
    if (m.universe() != ground_size) {
      throw Error(Errc::dimension, "family member sized " +
                                       std::to_string(m.universe()) +
                                       " over ground set of size " +
                                       std::to_string(ground_size));
    }
  }
  TranslateFamily f;
  f.kind_ = kind;
  f.ground_size_ = ground_size;
  f.members_ = std::move(members);
  return f;
}

std::size_t TranslateFamily::member_count() const {
  return kind_ == FamilyKind::left_translates ? ground_size_ : members_.size();
}

Subset TranslateFamily::member(std::size_t i) const {
  if (kind_ == FamilyKind::left_translates) {
    return left_translate(*group_, static_cast<Element>(i), *base_);
  }
  return members_.at(i);
}

std::vector<Subset> TranslateFamily::members() const {
  if (kind_ != FamilyKind::left_translates) return members_;
  std::vector<Subset> out;
  out.reserve(ground_size_);
  for (std::size_t t = 0; t < ground_size_; ++t) out.push_back(member(t));
  return out;
}

Subset left_translate(const FiniteGroup& g, Element t, const Subset& a) {
  if (a.universe() != g.order()) {
    throw Error(Errc::dimension, "subset sized " + std::to_string(a.universe()) +
                                     " for group " + g.descriptor());
  }
  if (t >= g.order()) {
    throw Error(Errc::dimension, "translating element " + std::to_string(t) +
                                     " outside " + g.descriptor());
  }
  Subset out(g.order());
  a.for_each([&](Element x) { out.insert(g.mul(t, x)); });
  return out;
}

namespace {

void check_probe(const TranslateFamily& f, const Subset& u) {
  if (u.universe() != f.ground_size()) {
    throw Error(Errc::dimension, "probe set sized " + std::to_string(u.universe()) +
                                     " over ground set of size " +
                                     std::to_string(f.ground_size()));
  }
  if (u.count() > kMaxTraceWidth) {
    throw Error(Errc::capacity, "probe set of size " + std::to_string(u.count()) +
                                    " exceeds the trace width " +
                                    std::to_string(kMaxTraceWidth));
  }
}

Trace trace_of(const Subset& member, const std::vector<Element>& probe) {
  Trace t;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    if (member.contains(probe[i])) t.mask |= std::uint32_t{1} << i;
  }
  return t;
}

}  // namespace

std::vector<Trace> restriction(const TranslateFamily& f, const Subset& u) {
  check_probe(f, u);
  const std::vector<Element> probe = u.elements();
  std::vector<Trace> traces;
  traces.reserve(f.member_count());
  for (std::size_t i = 0; i < f.member_count(); ++i) {
    traces.push_back(trace_of(f.member(i), probe));
  }
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  return traces;
}

bool is_shattered(const TranslateFamily& f, const Subset& u) {
  check_probe(f, u);
  return restriction(f, u).size() == (std::size_t{1} << u.count());
}

bool cuts_out(const TranslateFamily& f, const Subset& u, const Subset& k) {
  check_probe(f, u);
  if (k.universe() != u.universe() || !k.is_subset_of(u)) {
    throw Error(Errc::precondition, "cut-out target is not a subset of the probe");
  }
  const std::vector<Element> probe = u.elements();
  const Trace target = trace_of(k, probe);
  for (std::size_t i = 0; i < f.member_count(); ++i) {
    if (trace_of(f.member(i), probe) == target) return true;
  }
  return false;
}

std::size_t vc_dim(const TranslateFamily& f, const VcOptions& options) {
  return vc_search(f, options).dimension;
}

std::size_t vc_dim_naive(const TranslateFamily& f) {
  const std::size_t n = f.ground_size();
  if (n > kNaiveMaxGround) {
    throw Error(Errc::capacity, "exhaustive VC scan limited to ground sets of " +
                                    std::to_string(kNaiveMaxGround) +
                                    " elements, got " + std::to_string(n));
  }
  if (f.member_count() == 0) {
    throw Error(Errc::undefined_family, "VC-dimension of an empty family");
  }
  std::vector<std::uint32_t> masks;
  for (const Subset& m : f.members()) {
    masks.push_back(static_cast<std::uint32_t>(m.words().empty() ? 0 : m.words()[0]));
  }
  std::size_t best = 0;
  std::vector<std::uint32_t> seen;
  for (std::uint32_t u = 0; u < (std::uint32_t{1} << n); ++u) {
    const auto k = static_cast<std::size_t>(std::popcount(u));
    if (k <= best || (std::size_t{1} << k) > masks.size()) continue;
    seen.clear();
    for (std::uint32_t m : masks) seen.push_back(m & u);
    std::sort(seen.begin(), seen.end());
    const auto distinct =
        static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
    if (distinct == (std::size_t{1} << k)) best = k;
  }
  return best;
}

TranslateFamily sisask_family(const FiniteGroup& g, const Subset& a) {
  if (a.universe() != g.order()) {
    throw Error(Errc::dimension, "subset sized " + std::to_string(a.universe()) +
                                     " for group " + g.descriptor());
  }
  if (a.empty()) {
    throw Error(Errc::precondition, "A·A^-1 is empty for the empty set");
  }
  const std::vector<Element> elems = a.elements();
  Subset difference(g.order());
  for (Element x : elems)
    for (Element y : elems) difference.insert(g.mul(x, g.inv(y)));

  std::vector<Subset> members;
  difference.for_each(
      [&](Element t) { members.push_back(left_translate(g, t, a) & a); });
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return TranslateFamily::from_members(g.order(), std::move(members),
                                       FamilyKind::sisask);
}

}  // namespace vcgroup

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "vcgroup/group.hpp"
#include "vcgroup/subset.hpp"

namespace vcgroup {

enum class FamilyKind { left_translates, digraph_neighborhoods, sisask, explicit_list };

/// A family of subsets of a common ground set.
///
/// Left-translate families {tA : t in G} are stored as (G, A) and expanded on
/// demand; every other kind stores its member list. Members may repeat (a
/// translate family of a set with a nontrivial stabilizer lists each distinct
/// translate several times); no result depends on the repetition.
class TranslateFamily {
 public:
  static TranslateFamily left_translates(FiniteGroup g, Subset base);
  static TranslateFamily from_members(std::size_t ground_size,
                                      std::vector<Subset> members,
                                      FamilyKind kind = FamilyKind::explicit_list);

  FamilyKind kind() const { return kind_; }
  std::size_t ground_size() const { return ground_size_; }
  std::size_t member_count() const;
  Subset member(std::size_t i) const;
  std::vector<Subset> members() const;

  const std::optional<FiniteGroup>& group() const { return group_; }
  const std::optional<Subset>& base() const { return base_; }

 private:
  TranslateFamily() = default;

  FamilyKind kind_ = FamilyKind::explicit_list;
  std::size_t ground_size_ = 0;
  std::optional<FiniteGroup> group_;
  std::optional<Subset> base_;
  std::vector<Subset> members_;
};

/// Intersection of one family member with an ordered probe set: bit i refers
/// to the i-th smallest element of the probe.
struct Trace {
  std::uint32_t mask = 0;
  friend auto operator<=>(const Trace&, const Trace&) = default;
};

// Probe sets wider than this cannot be encoded as a Trace.
inline constexpr std::size_t kMaxTraceWidth = 30;

// Largest ground set the exhaustive oracle accepts.
inline constexpr std::size_t kNaiveMaxGround = 24;

/// {t*x : x in a}.
Subset left_translate(const FiniteGroup& g, Element t, const Subset& a);

/// The distinct traces F ∩ U over all members F, in ascending mask order.
std::vector<Trace> restriction(const TranslateFamily& f, const Subset& u);

bool is_shattered(const TranslateFamily& f, const Subset& u);

/// True iff some member F has F ∩ U = K. Requires K ⊆ U.
bool cuts_out(const TranslateFamily& f, const Subset& u, const Subset& k);

struct VcOptions {
  // Abort with Errc::resource once the search has expanded this many nodes;
  // zero means unlimited.
  std::uint64_t node_limit = 0;
};

struct VcResult {
  std::size_t dimension = 0;
  std::vector<Element> witness;  // a shattered set of that size, ascending
  std::uint64_t nodes = 0;       // search nodes expanded, summed over targets
};

/// Exact VC-dimension with a witness set.
///
/// The search grows candidate sets one element at a time in ascending index
/// order and keeps, for the current set U, the partition of the family into
/// the 2^|U| cells of members with a fixed trace on U. U extends to a
/// shattered set of size D only if every cell still holds at least
/// 2^(D-|U|) members, and an element is kept as a candidate only if adding
/// it preserves that bound; a depth-first walk over this pruned tree decides
/// each target D in turn. Translate families are additionally anchored at
/// the identity, since U is shattered iff u^-1 U is.
VcResult vc_search(const TranslateFamily& f, const VcOptions& options = {});

std::size_t vc_dim(const TranslateFamily& f, const VcOptions& options = {});

/// Exhaustive scan of every subset of the ground set; ground size at most
/// kNaiveMaxGround. Shares no code with vc_search.
std::size_t vc_dim_naive(const TranslateFamily& f);

/// {tA ∩ A : t in A·A^-1} with duplicate members removed.
TranslateFamily sisask_family(const FiniteGroup& g, const Subset& a);

}  // namespace vcgroup

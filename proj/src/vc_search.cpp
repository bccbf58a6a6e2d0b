#include <algorithm>
#include <bit>
#include <numeric>

#include "vcgroup/error.hpp"
#include "vcgroup/set_system.hpp"

namespace vcgroup {

namespace {

using Word = std::uint64_t;

// Column view of a family: for every ground element x, the bit-vector over
// distinct members F with x in F.
struct Signatures {
  std::size_t ground = 0;
  std::size_t members = 0;
  std::size_t words = 0;
  std::vector<Word> bits;  // ground * words

  const Word* of(Element x) const { return bits.data() + x * words; }
};

Signatures build_signatures(const TranslateFamily& f) {
  std::vector<Subset> members = f.members();
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  Signatures s;
  s.ground = f.ground_size();
  s.members = members.size();
  s.words = (s.members + 63) / 64;
  s.bits.assign(s.ground * s.words, 0);
  for (std::size_t j = 0; j < members.size(); ++j) {
    members[j].for_each([&](Element x) {
      s.bits[x * s.words + j / 64] |= Word{1} << (j % 64);
    });
  }
  return s;
}

std::size_t floor_log2(std::size_t v) {
  return v == 0 ? 0 : static_cast<std::size_t>(std::bit_width(v)) - 1;
}

// Depth-first search for a shattered set of exactly `target` elements.
class ShatterSearch {
 public:
  // With a group, the search runs over anchored sets {e, u2, ...} in which
  // every quotient a^-1 b of two distinct members has index at least u2.
  // Any set S can be brought into that form: pick a, b in S minimising the
  // index of a^-1 b and pass to a^-1 S, which has the same quotients.
  ShatterSearch(const Signatures& sig, const FiniteGroup* group,
                const VcOptions& options, std::uint64_t& nodes)
      : sig_(sig), group_(group), options_(options), nodes_(nodes) {
    if (group_) anchor_ = group_->identity();
  }

  std::optional<std::vector<Element>> find(std::size_t target) {
    target_ = target;
    const std::size_t w = sig_.words;
    cells_.assign(target + 1, {});
    sizes_.assign(target + 1, {});
    order_.assign(target + 1, {});
    candidates_.assign(target + 1, {});
    chosen_.clear();

    // Root: the empty set has one cell holding every member.
    cells_[0].assign(w, 0);
    for (std::size_t j = 0; j < sig_.members; ++j) {
      cells_[0][j / 64] |= Word{1} << (j % 64);
    }
    sizes_[0] = {sig_.members};
    order_[0] = {0};
    if (target == 0) return std::vector<Element>{};

    std::size_t depth = 0;
    if (anchor_) {
      if (!viable(0, *anchor_)) return std::nullopt;
      split(0, *anchor_);
      chosen_.push_back(*anchor_);
      depth = 1;
      if (target == 1) return chosen_;
    }
    std::vector<Element> all;
    for (Element x = 0; x < sig_.ground; ++x) {
      if (anchor_ && x == *anchor_) continue;
      if (viable(depth, x)) all.push_back(x);
    }
    candidates_[depth] = std::move(all);
    if (descend(depth)) return chosen_;
    return std::nullopt;
  }

 private:
  // Minimum cell size that still allows `target` elements once the current
  // set has `depth` elements.
  std::size_t need(std::size_t depth) const {
    return std::size_t{1} << (target_ - depth);
  }

  // Would adding x to the set at `depth` keep every cell at or above the
  // bound for depth + 1?
  bool viable(std::size_t depth, Element x) const {
    const std::size_t w = sig_.words;
    const std::size_t bound = need(depth + 1);
    const Word* sx = sig_.of(x);
    const Word* cells = cells_[depth].data();
    for (std::size_t c : order_[depth]) {
      const Word* cell = cells + c * w;
      std::size_t in = 0;
      for (std::size_t i = 0; i < w; ++i) {
        in += static_cast<std::size_t>(std::popcount(cell[i] & sx[i]));
      }
      if (in < bound || sizes_[depth][c] - in < bound) return false;
    }
    return true;
  }

  // Refines the partition at `depth` by x into the partition at depth + 1.
  // Cell c splits into 2c (x absent) and 2c+1 (x present).
  void split(std::size_t depth, Element x) {
    const std::size_t w = sig_.words;
    const std::size_t count = std::size_t{1} << depth;
    const Word* sx = sig_.of(x);
    auto& next = cells_[depth + 1];
    auto& next_sizes = sizes_[depth + 1];
    next.resize(2 * count * w);
    next_sizes.resize(2 * count);
    for (std::size_t c = 0; c < count; ++c) {
      const Word* cell = cells_[depth].data() + c * w;
      Word* out0 = next.data() + (2 * c) * w;
      Word* out1 = next.data() + (2 * c + 1) * w;
      std::size_t in = 0;
      for (std::size_t i = 0; i < w; ++i) {
        out1[i] = cell[i] & sx[i];
        out0[i] = cell[i] & ~sx[i];
        in += static_cast<std::size_t>(std::popcount(out1[i]));
      }
      next_sizes[2 * c + 1] = in;
      next_sizes[2 * c] = sizes_[depth][c] - in;
    }
    auto& ord = order_[depth + 1];
    ord.resize(2 * count);
    std::iota(ord.begin(), ord.end(), std::size_t{0});
    std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
      return next_sizes[a] < next_sizes[b];
    });
  }

  bool quotients_clear(Element a, Element b) const {
    return group_->mul(group_->inv(a), b) >= floor_ &&
           group_->mul(group_->inv(b), a) >= floor_;
  }

  bool descend(std::size_t depth) {
    const auto& cand = candidates_[depth];
    const std::size_t missing = target_ - depth;
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
      if (cand.size() - idx < missing) return false;
      const Element x = cand[idx];
      if (options_.node_limit != 0 && nodes_ >= options_.node_limit) {
        throw Error(Errc::resource, "VC search exceeded its node limit of " +
                                        std::to_string(options_.node_limit));
      }
      ++nodes_;
      chosen_.push_back(x);
      if (missing == 1) return true;
      if (group_ && depth == 1) {
        if (group_->inv(x) < x) {
          chosen_.pop_back();
          continue;
        }
        floor_ = x;
      }
      split(depth, x);
      auto& next = candidates_[depth + 1];
      next.clear();
      for (std::size_t k = idx + 1; k < cand.size(); ++k) {
        const Element y = cand[k];
        if (group_ && !(quotients_clear(x, y) && (depth > 1 || group_->inv(y) >= floor_))) {
          continue;
        }
        if (viable(depth + 1, y)) next.push_back(y);
      }
      if (next.size() >= missing - 1 && descend(depth + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Signatures& sig_;
  const FiniteGroup* group_;
  std::optional<Element> anchor_;
  Element floor_ = 0;
  const VcOptions& options_;
  std::uint64_t& nodes_;
  std::size_t target_ = 0;
  std::vector<std::vector<Word>> cells_;
  std::vector<std::vector<std::size_t>> sizes_;
  std::vector<std::vector<std::size_t>> order_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> chosen_;
};

}  // namespace

VcResult vc_search(const TranslateFamily& f, const VcOptions& options) {
  if (f.member_count() == 0) {
    throw Error(Errc::undefined_family, "VC-dimension of an empty family");
  }
  const Signatures sig = build_signatures(f);
  const FiniteGroup* group =
      f.kind() == FamilyKind::left_translates ? &*f.group() : nullptr;

  VcResult result;
  ShatterSearch search(sig, group, options, result.nodes);
  const std::size_t ceiling = floor_log2(sig.members);
  for (std::size_t target = 1; target <= ceiling; ++target) {
    auto found = search.find(target);
    if (!found) break;
    result.dimension = target;
    result.witness = std::move(*found);
    std::sort(result.witness.begin(), result.witness.end());
  }
  return result;
}

}  // namespace vcgroup

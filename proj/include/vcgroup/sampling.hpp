#pragma once

#include <cstdint>
#include <limits>

#include "vcgroup/group.hpp"
#include "vcgroup/subset.hpp"

namespace vcgroup {

/// Counter-based generator: output i is the SplitMix64 finalizer applied to
/// seed + (i+1)*0x9e3779b97f4a7c15. The stream is a pure function of the
/// seed, so trial sub-streams never depend on execution order.
class SeededRng {
 public:
  using result_type = std::uint64_t;

  explicit SeededRng(std::uint64_t seed) : seed_(seed) {}

  /// Sub-stream for one experiment trial, keyed by (base seed, group order,
  /// trial index).
  static SeededRng for_trial(std::uint64_t base_seed, std::uint64_t n,
                             std::uint64_t trial);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();
  /// Uniform on [0,1) with 53 bits of resolution.
  double next_unit();
  /// Uniform on [0, bound) for bound >= 1, rejection-sampled.
  std::uint64_t next_below(std::uint64_t bound);

  result_type operator()() { return next_u64(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

/// Each element is kept independently with probability p; one draw per
/// element in ascending index order.
Subset bernoulli_subset(const FiniteGroup& g, double p, SeededRng& rng);

/// Uniform over all subsets of cardinality d (selection sampling: one draw
/// per element in ascending index order until d are chosen).
Subset uniform_fixed_size(const FiniteGroup& g, std::size_t d, SeededRng& rng);

/// A ∪ A^-1.
Subset symmetrize(const FiniteGroup& g, const Subset& a);

}  // namespace vcgroup

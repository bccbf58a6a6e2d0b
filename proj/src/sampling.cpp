#include "vcgroup/sampling.hpp"

#include <cmath>

#include "vcgroup/error.hpp"

namespace vcgroup {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SeededRng SeededRng::for_trial(std::uint64_t base_seed, std::uint64_t n,
                               std::uint64_t trial) {
  std::uint64_t key = mix64(base_seed + kGamma);
  key = mix64(key ^ (n * kGamma + 1));
  key = mix64(key ^ (trial * kGamma + 2));
  return SeededRng(key);
}

std::uint64_t SeededRng::next_u64() {
  ++counter_;
  return mix64(seed_ + counter_ * kGamma);
}

double SeededRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t SeededRng::next_below(std::uint64_t bound) {
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % bound;
}

Subset bernoulli_subset(const FiniteGroup& g, double p, SeededRng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::domain, "Bernoulli parameter " + std::to_string(p) +
                                  " outside [0,1]");
  }
  Subset a(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (rng.next_unit() < p) a.insert(x);
  }
  return a;
}

Subset uniform_fixed_size(const FiniteGroup& g, std::size_t d, SeededRng& rng) {
  const std::size_t n = g.order();
  if (d > n) {
    throw Error(Errc::domain, "cannot choose " + std::to_string(d) +
                                  " elements from a group of order " +
                                  std::to_string(n));
  }
  Subset a(n);
  std::size_t chosen = 0;
  for (Element x = 0; x < n && chosen < d; ++x) {
    // Keep x with probability (still needed) / (still available).
    if (rng.next_below(n - x) < d - chosen) {
      a.insert(x);
      ++chosen;
    }
  }
  return a;
}

Subset symmetrize(const FiniteGroup& g, const Subset& a) {
  if (a.universe() != g.order()) {
    throw Error(Errc::dimension, "subset sized " + std::to_string(a.universe()) +
                                     " for group " + g.descriptor());
  }
  return a | inverse_set(g, a);
}

}  // namespace vcgroup

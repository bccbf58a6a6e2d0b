#pragma once

#include <cstdint>

#include "vcgroup/cayley.hpp"
#include "vcgroup/subset.hpp"

namespace vcgroup {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// The r-th powers of (Z/nZ)^x for prime n.
struct ResidueSet {
  std::uint64_t modulus = 0;
  std::uint64_t exponent = 0;            // as requested
  std::uint64_t effective_exponent = 0;  // gcd(exponent, modulus - 1)
  Subset members;
};

ResidueSet power_residues(std::uint64_t n, std::uint64_t r);

/// Cayley digraph of Z/nZ generated by the quadratic residues.
Digraph paley_digraph(std::uint64_t n);

}  // namespace vcgroup

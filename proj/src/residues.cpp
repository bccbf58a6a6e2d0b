#include "vcgroup/residues.hpp"

#include <numeric>

#include "vcgroup/error.hpp"

namespace vcgroup {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  // These twelve bases decide primality for all n < 3.3e24.
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

ResidueSet power_residues(std::uint64_t n, std::uint64_t r) {
  if (!is_prime(n)) {
    throw Error(Errc::precondition, std::to_string(n) + " is not prime");
  }
  if (r < 2) {
    throw Error(Errc::precondition, "residue exponent must be at least 2");
  }
  if (n > kMaxGroupOrder) {
    throw Error(Errc::capacity, "modulus " + std::to_string(n) +
                                    " exceeds the supported group order");
  }
  ResidueSet res;
  res.modulus = n;
  res.exponent = r;
  res.effective_exponent = std::gcd(r, n - 1);
  res.members = Subset(n);
  for (std::uint64_t x = 1; x < n; ++x) {
    res.members.insert(static_cast<Element>(pow_mod(x, r, n)));
  }
  return res;
}

Digraph paley_digraph(std::uint64_t n) {
  const ResidueSet qr = power_residues(n, 2);
  return cayley_digraph(make_cyclic(n), qr.members);
}

}  // namespace vcgroup

#pragma once

// Modular and multiplicative arithmetic on machine words.
//
// Residues are std::uint64_t. Products go through unsigned __int128 so every
// modulus up to 2^64 - 1 is safe, which covers all orders handled here
// (the largest worked example is about 1.6e10).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hgsq {

using u64 = std::uint64_t;

inline constexpr u64 kDefaultFactorBound = 1'000'000;

/// Distinct-prime factorization of a squarefree positive integer.
struct Factorization {
  u64 n = 1;
  std::vector<u64> primes;  // strictly increasing, product == n

  std::size_t omega() const noexcept { return primes.size(); }
  bool contains(u64 p) const noexcept;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Prime power p^exponent, used for general (not necessarily squarefree) moduli.
struct PrimePower {
  u64 prime;
  unsigned exponent;
};

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) noexcept {
  // a, b < m
  return a >= m - b ? a - (m - b) : a + b;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) noexcept { return a >= b ? a - b : a + (m - b); }

u64 gcd(u64 a, u64 b) noexcept;
u64 lcm(u64 a, u64 b);

/// a^j mod m by square-and-multiply. mod_pow(x, 0, 1) == 0.
u64 mod_pow(u64 a, u64 j, u64 m) noexcept;

/// Inverse of a modulo m. Throws Error(NotAUnit) when gcd(a, m) != 1.
u64 mod_inv(u64 a, u64 m);

/// Reduces a possibly negative integer into [0, m).
u64 reduce(std::int64_t a, u64 m) noexcept;

/// Deterministic primality test valid for the whole 64-bit range.
bool is_prime(u64 n) noexcept;

/// Trial-division factorization of n >= 1 into prime powers (n up to ~1e12 is
/// instant; larger cofactors are checked with is_prime).
std::vector<PrimePower> factor_general(u64 n);

/// Distinct-prime factorization of a squarefree n. Trial division by primes up
/// to `bound`; a leftover cofactor is accepted if it is certified prime.
/// Throws NotSquarefree or FactorizationIncomplete.
Factorization factor_squarefree(u64 n, u64 bound = kDefaultFactorBound);

/// Builds a Factorization from primes already known to be distinct.
Factorization factorization_of_primes(std::vector<u64> primes);

/// Primes of f that also divide m.
Factorization restrict_to(const Factorization& f, u64 m);

bool is_squarefree(u64 n);

/// Euler totient of a squarefree number given its factorization.
u64 euler_phi(const Factorization& f) noexcept;

/// Euler totient of an arbitrary n >= 1.
u64 euler_phi(u64 n);

/// Least j >= 1 with a^j == 1 (mod m). Throws NotAUnit if gcd(a, m) != 1.
u64 mult_order(u64 a, u64 m);

/// Same as mult_order(a, f.n) for a squarefree modulus: the lcm of the local
/// orders at each prime of f.
u64 mult_order(u64 a, const Factorization& f);

/// Smallest generator of the cyclic group Z_p^x for an odd or even prime p.
u64 primitive_root(u64 p);

/// A residue congruence r (mod m).
struct Congruence {
  u64 residue;
  u64 modulus;
};

/// Unique x mod prod(m_i) with x == r_i (mod m_i). Throws ModuliNotCoprime,
/// or Overflow if the product of the moduli does not fit in 64 bits.
Congruence crt_combine(std::span<const Congruence> parts);

/// Divisors of a squarefree number, ascending.
std::vector<u64> divisors(const Factorization& f);

}  // namespace hgsq

#include "hgsq/modarith.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <numeric>
#include <string>

#include "hgsq/bigint.hpp"
#include "hgsq/error.hpp"

namespace hgsq {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::FactorizationIncomplete: return "FactorizationIncomplete";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::ModuliNotCoprime: return "ModuliNotCoprime";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::Incompatible: return "Incompatible";
    case Errc::NonIntegralResult: return "NonIntegralResult";
    case Errc::RouteMismatch: return "RouteMismatch";
    case Errc::NotOddSquarefree: return "NotOddSquarefree";
    case Errc::CongruenceUnsatisfied: return "CongruenceUnsatisfied";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {
std::atomic<std::uint64_t> g_integrality_failures{0};
}

std::uint64_t integrality_failures() noexcept { return g_integrality_failures.load(); }

BigInt require_integer(const BigRational& value, const char* what) {
  if (boost::multiprecision::denominator(value) != 1) {
    g_integrality_failures.fetch_add(1);
    throw Error(Errc::NonIntegralResult, std::string(what) + " = " + value.str());
  }
  return boost::multiprecision::numerator(value);
}

bool Factorization::contains(u64 p) const noexcept {
  return std::binary_search(primes.begin(), primes.end(), p);
}

u64 gcd(u64 a, u64 b) noexcept { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  const u64 q = a / gcd(a, b);
  if (q > std::numeric_limits<u64>::max() / b) throw Error(Errc::Overflow, "lcm");
  return q * b;
}

u64 mod_pow(u64 a, u64 j, u64 m) noexcept {
  if (m == 1) return 0;
  u64 result = 1;
  a %= m;
  while (j > 0) {
    if (j & 1U) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    j >>= 1U;
  }
  return result;
}

u64 mod_inv(u64 a, u64 m) {
  if (m == 1) return 0;
  // extended Euclid on signed 128-bit to stay clear of overflow
  i128 old_r = static_cast<i128>(a % m), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) {
    throw Error(Errc::NotAUnit, std::to_string(a) + " mod " + std::to_string(m));
  }
  i128 x = old_s % static_cast<i128>(m);
  if (x < 0) x += m;
  return static_cast<u64>(x);
}

u64 reduce(std::int64_t a, u64 m) noexcept {
  const auto sm = static_cast<i128>(m);
  i128 x = static_cast<i128>(a) % sm;
  if (x < 0) x += sm;
  return static_cast<u64>(x);
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These witnesses are deterministic for every n < 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    u64 x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factor_general(u64 n) {
  std::vector<PrimePower> out;
  if (n == 0) throw Error(Errc::InvalidArgument, "factor_general(0)");
  for (u64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.push_back({p, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

Factorization factor_squarefree(u64 n, u64 bound) {
  if (n == 0) throw Error(Errc::InvalidArgument, "factor_squarefree(0)");
  if (bound < 2) throw Error(Errc::InvalidArgument, "factor bound must be >= 2");
  Factorization f;
  f.n = n;
  u64 rest = n;
  for (u64 p = 2; p <= bound && p <= rest / p; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) {
      throw Error(Errc::NotSquarefree, std::to_string(p) + "^2 divides " + std::to_string(n));
    }
    f.primes.push_back(p);
  }
  if (rest > 1) {
    // Either rest is below bound^2 (hence prime, all smaller primes are
    // gone) or it needs a certificate.
    const bool small = bound <= std::numeric_limits<u64>::max() / bound && rest <= bound * bound;
    if (!small && !is_prime(rest)) {
      throw Error(Errc::FactorizationIncomplete,
                  "composite cofactor " + std::to_string(rest) + " of " + std::to_string(n));
    }
    if (!f.primes.empty() && f.primes.back() == rest) {
      throw Error(Errc::NotSquarefree, std::to_string(rest) + "^2 divides " + std::to_string(n));
    }
    f.primes.push_back(rest);
  }
  return f;
}

Factorization factorization_of_primes(std::vector<u64> primes) {
  std::sort(primes.begin(), primes.end());
  Factorization f;
  f.n = 1;
  for (u64 p : primes) {
    if (f.n > std::numeric_limits<u64>::max() / p) throw Error(Errc::Overflow, "prime product");
    f.n *= p;
  }
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw Error(Errc::NotSquarefree, "repeated prime");
  }
  f.primes = std::move(primes);
  return f;
}

Factorization restrict_to(const Factorization& f, u64 m) {
  std::vector<u64> ps;
  for (u64 p : f.primes) {
    if (m % p == 0) ps.push_back(p);
  }
  return factorization_of_primes(std::move(ps));
}

bool is_squarefree(u64 n) {
  for (const auto& pp : factor_general(n)) {
    if (pp.exponent > 1) return false;
  }
  return n != 0;
}

u64 euler_phi(const Factorization& f) noexcept {
  u64 phi = 1;
  for (u64 p : f.primes) phi *= p - 1;
  return phi;
}

u64 euler_phi(u64 n) {
  u64 phi = 1;
  for (const auto& [p, k] : factor_general(n)) {
    phi *= p - 1;
    for (unsigned i = 1; i < k; ++i) phi *= p;
  }
  return phi;
}

namespace {

// Order of a in a group of exponent dividing `exponent`, where the prime
// factorization of `exponent` is known.
u64 order_dividing(u64 a, u64 m, u64 exponent, const std::vector<PrimePower>& exp_factors) {
  u64 order = exponent;
  for (const auto& [p, k] : exp_factors) {
    for (unsigned i = 0; i < k; ++i) {
      if (mod_pow(a, order / p, m) == 1) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

}  // namespace

u64 mult_order(u64 a, u64 m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "mult_order modulus 0");
  if (gcd(a % m, m) != 1 && m != 1) {
    throw Error(Errc::NotAUnit, std::to_string(a) + " mod " + std::to_string(m));
  }
  if (m == 1) return 1;
  const u64 phi = euler_phi(m);
  return order_dividing(a % m, m, phi, factor_general(phi));
}

u64 mult_order(u64 a, const Factorization& f) {
  if (f.n == 1) return 1;
  if (gcd(a % f.n, f.n) != 1) {
    throw Error(Errc::NotAUnit, std::to_string(a) + " mod " + std::to_string(f.n));
  }
  u64 order = 1;
  for (u64 q : f.primes) {
    order = lcm(order, order_dividing(a % q, q, q - 1, factor_general(q - 1)));
  }
  return order;
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto fs = factor_general(p - 1);
  for (u64 cand = 2; cand < p; ++cand) {
    bool ok = true;
    for (const auto& pp : fs) {
      if (mod_pow(cand, (p - 1) / pp.prime, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
}

Congruence crt_combine(std::span<const Congruence> parts) {
  Congruence acc{0, 1};
  for (const auto& [r, m] : parts) {
    if (m == 0) throw Error(Errc::InvalidArgument, "crt modulus 0");
    if (gcd(acc.modulus, m) != 1) {
      throw Error(Errc::ModuliNotCoprime,
                  std::to_string(acc.modulus) + " and " + std::to_string(m));
    }
    if (acc.modulus > std::numeric_limits<u64>::max() / m) throw Error(Errc::Overflow, "crt");
    const u64 big = acc.modulus * m;
    // x = acc + M * ((r - acc) * M^{-1} mod m)
    const u64 diff = sub_mod(r % m, acc.residue % m, m);
    const u64 step = mul_mod(diff, mod_inv(acc.modulus % m, m), m);
    const auto x = static_cast<u128>(acc.modulus) * step + acc.residue;
    acc = {static_cast<u64>(x % big), big};
  }
  return acc;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (u64 p : f.primes) {
    const std::size_t size = out.size();
    for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hgsq

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hgsq/error.hpp"
#include "hgsq/modarith.hpp"

using namespace hgsq;

namespace {

u64 phi_by_counting(u64 m) {
  u64 c = 0;
  for (u64 a = 1; a <= m; ++a) c += gcd(a, m) == 1 ? 1 : 0;
  return c;
}

u64 order_by_iteration(u64 a, u64 m) {
  u64 x = a % m, j = 1;
  while (x != 1 % m) {
    x = x * a % m;
    ++j;
  }
  return j;
}

}  // namespace

TEST(FactorSquarefree, SmallProduct) {
  EXPECT_EQ(factor_squarefree(42).primes, (std::vector<u64>{2, 3, 7}));
}

TEST(FactorSquarefree, SevenPrimeOrder) {
  const Factorization f = factor_squarefree(16309243734ULL, 1'000'000);
  EXPECT_EQ(f.primes, (std::vector<u64>{2, 3, 7, 43, 127, 211, 337}));
  EXPECT_EQ(f.n, 16309243734ULL);
}

TEST(FactorSquarefree, RejectsSquareFactor) {
  try {
    factor_squarefree(12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSquarefree);
  }
}

TEST(FactorSquarefree, One) {
  EXPECT_TRUE(factor_squarefree(1).primes.empty());
}

TEST(FactorSquarefree, LargePrimeCofactorIsCertified) {
  const Factorization f = factor_squarefree(2 * 3 * 1000000000039ULL, 100);
  EXPECT_EQ(f.primes, (std::vector<u64>{2, 3, 1000000000039ULL}));
}

TEST(FactorSquarefree, UnresolvedCompositeCofactor) {
  try {
    factor_squarefree(1000003ULL * 1000033ULL, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FactorizationIncomplete);
  }
}

TEST(FactorSquarefree, ProductOfPrimesIsN) {
  for (u64 n = 1; n <= 3000; ++n) {
    if (!is_squarefree(n)) continue;
    u64 prod = 1;
    for (u64 p : factor_squarefree(n).primes) {
      EXPECT_TRUE(is_prime(p));
      prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(factorization_of_primes({2, 3, 7})), 12U);
  EXPECT_EQ(euler_phi(factorization_of_primes({})), 1U);
  EXPECT_EQ(euler_phi(factorization_of_primes({43, 127, 211, 337})), 42ULL * 126 * 210 * 336);
}

TEST(EulerPhi, MatchesCounting) {
  for (u64 m = 1; m <= 1000; ++m) EXPECT_EQ(euler_phi(m), phi_by_counting(m)) << m;
}

TEST(MultOrder, Examples) {
  EXPECT_EQ(mult_order(2, 7), 3U);
  EXPECT_EQ(mult_order(1, 35), 1U);
  EXPECT_EQ(mult_order(3, 43), 42U);
  EXPECT_EQ(mult_order(5, 127), 42U);
}

TEST(MultOrder, NotAUnit) {
  try {
    mult_order(6, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAUnit);
  }
}

TEST(MultOrder, ExhaustiveUpTo1000) {
  for (u64 m = 2; m <= 1000; ++m) {
    const u64 phi = euler_phi(m);
    for (u64 a = 1; a < m; ++a) {
      if (gcd(a, m) != 1) continue;
      const u64 ord = mult_order(a, m);
      ASSERT_EQ(phi % ord, 0U);
      ASSERT_EQ(ord, order_by_iteration(a, m)) << a << " mod " << m;
    }
  }
}

TEST(ModPow, Examples) {
  EXPECT_EQ(mod_pow(2, 3, 7), 1U);
  EXPECT_EQ(mod_pow(5, 42, 127), 1U);
  EXPECT_EQ(mod_pow(7, 0, 1), 0U);
}

TEST(ModInv, Examples) {
  EXPECT_EQ(mod_inv(1, 17), 1U);
  EXPECT_EQ(mod_inv(3, 7), 5U);
  EXPECT_EQ(mod_inv(0, 1), 0U);
  EXPECT_THROW(mod_inv(4, 8), Error);
}

TEST(ModInv, ProductIsOne) {
  for (u64 m = 2; m <= 500; ++m) {
    for (u64 a = 1; a < m; ++a) {
      if (gcd(a, m) == 1) ASSERT_EQ(a * mod_inv(a, m) % m, 1U);
    }
  }
}

TEST(Crt, Examples) {
  const Congruence two[] = {{1, 2}, {2, 3}};
  EXPECT_EQ(crt_combine(two).residue, 5U);
  EXPECT_EQ(crt_combine(two).modulus, 6U);
  const Congruence one[] = {{0, 11}};
  EXPECT_EQ(crt_combine(one).residue, 0U);
}

TEST(Crt, SevenPrimeResidues) {
  const Congruence parts[] = {{3, 43}, {5, 127}, {26, 211}, {21, 337}};
  const Congruence k = crt_combine(parts);
  EXPECT_EQ(k.modulus, 43ULL * 127 * 211 * 337);
  for (const Congruence& c : parts) EXPECT_EQ(k.residue % c.modulus, c.residue);
}

TEST(Crt, RejectsSharedFactor) {
  const Congruence parts[] = {{1, 4}, {1, 6}};
  try {
    crt_combine(parts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ModuliNotCoprime);
  }
}

TEST(Crt, RoundTripRandom) {
  std::mt19937_64 rng(7);
  const std::vector<u64> moduli = {9973, 9967, 9949, 8, 27, 25, 49};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Congruence> parts;
    for (u64 m : {moduli[rng() % 3], moduli[3 + rng() % 4]}) parts.push_back({rng() % m, m});
    const Congruence c = crt_combine(parts);
    for (const Congruence& p : parts) ASSERT_EQ(c.residue % p.modulus, p.residue);
  }
}

TEST(IsPrime, AgreesWithSieve) {
  std::vector<bool> composite(20000, false);
  for (u64 i = 2; i < composite.size(); ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j < composite.size(); j += i) composite[j] = true;
  }
  for (u64 i = 0; i < composite.size(); ++i) ASSERT_EQ(is_prime(i), i >= 2 && !composite[i]) << i;
}

TEST(PrimitiveRoot, HasFullOrder) {
  for (u64 p : {3ULL, 7ULL, 43ULL, 127ULL, 211ULL, 337ULL, 9973ULL}) {
    EXPECT_EQ(mult_order(primitive_root(p), p), p - 1);
  }
}

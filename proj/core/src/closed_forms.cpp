#include "hgsq/closed_forms.hpp"

#include <string>

#include "hgsq/error.hpp"
#include "hgsq/formula.hpp"
#include "hgsq/parallel.hpp"

namespace hgsq {

namespace {

void require_prime(u64 p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
}

void require_congruent_one(u64 a, u64 m) {
  if (a % m != 1) {
    throw Error(Errc::CongruenceUnsatisfied,
                std::to_string(a) + " is not 1 mod " + std::to_string(m));
  }
}

}  // namespace

CountMatrix count_matrix(u64 n, unsigned threads) {
  CountMatrix m;
  m.classes = enumerate_groups(n);
  const std::size_t size = m.classes.size();
  m.cells.assign(size, std::vector<BigInt>(size));
  parallel_for(size * size, threads, [&](std::size_t idx) {
    const std::size_t r = idx / size;
    const std::size_t c = idx % size;
    m.cells[r][c] = count_hgs(m.classes[r], m.classes[c]);
  });
  return m;
}

TwoPrimeTable two_prime_table(u64 p, u64 q) {
  require_prime(p);
  require_prime(q);
  require_congruent_one(p, q);
  TwoPrimeTable t;
  t.p = p;
  t.q = q;
  t.general = count_matrix(p * q);
  const BigInt bp(p), bq(q);
  t.closed = {{{BigInt(1), 2 * (bq - 1)}, {bp, 2 * bp * (bq - 2) + 2}}};
  t.agrees = t.general.classes.size() == 2;
  for (std::size_t r = 0; t.agrees && r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) t.agrees = t.agrees && t.general.cells[r][c] == t.closed[r][c];
  }
  return t;
}

int three_prime_type(const GroupSpec& g, u64 p1, u64 p2, u64 p3) {
  const DerivedParams p = derived_params(g);
  if (g.d == 1) return 1;
  if (g.d == p1 && p.g == p2) return 2;
  if (g.d == p1 && p.g == p3) return 3;
  if (g.d == p1 && p.g == p2 * p3) return 4;
  if (g.d == p2 && p.g == p3) return 5;
  if (g.d == p1 * p2 && p.g == p3) return 6;
  throw Error(Errc::InvalidArgument, "group " + g.triple() + " fits no factorization type");
}

bool is_same_or_hat(const GroupSpec& galois, const GroupSpec& type, u64 p2, u64 p3) {
  if (is_isomorphic(galois, type)) return true;
  const Congruence parts[] = {{galois.k % p2, p2}, {mod_inv(galois.k % p3, p3), p3}};
  const u64 hat = crt_combine(parts).residue;
  return is_isomorphic(make_group(galois.d, galois.e, hat), type);
}

BigInt three_prime_closed_form(int row, int col, u64 p1_, u64 p2_, u64 p3_, bool same_or_hat) {
  const BigInt p1(p1_), p2(p2_), p3(p3_);
  if (row < 1 || row > 6 || col < 1 || col > 6) {
    throw Error(Errc::InvalidArgument, "factorization types are 1..6");
  }
  if (p1_ == 2) {
    const BigInt t[6][6] = {
        {1, 2, 2, 4, 2 * (p2 - 1), 2 * (p2 - 1)},
        {p2, 2, 2 * p2, 4, 0, 0},
        {p3, 2 * p3, 2, 4, 2 * (p2 - 1) * p3, 2 * (p2 - 1) * p3},
        {p2 * p3, 2 * p3, 2 * p2, 4, 0, 0},
        {p3, 2 * p3, 2 * p3, 4 * p3, 2 + 2 * (p2 - 2) * p3, 2 * (p2 - 1) * p3},
        {p3, 2 * p3, 2 * p3, 4 * p3, 2 * (p2 - 1) * p3, 2 + 2 * (p2 - 2) * p3},
    };
    return t[row - 1][col - 1];
  }
  if (row == 4 && col == 4) {
    if (same_or_hat) return 4 * p1 * p2 * p3 - 10 * p2 * p3 + 2 * p2 + 2 * p3 + 2;
    return 4 * p1 * p2 * p3 - 12 * p2 * p3 + 4 * p2 + 4 * p3;
  }
  // Cell (5, 5) is 2 + 2(p2 - 2) p3: with S = {p3}, r_{p3} = d = p2 the
  // single-prime form 2^omega(g) gamma / p (1 + (phi(d) - 1) p) gives it, and
  // it does not depend on p1 (same value as the p1 = 2 table).
  const BigInt t[6][6] = {
      {1, 2 * (p1 - 1), 2 * (p1 - 1), 4 * (p1 - 1), 2 * (p2 - 1), 2 * (p1 - 1) * (p2 - 1)},
      {p2, 2 + 2 * (p1 - 2) * p2, 2 * (p1 - 1) * p2, 4 + 4 * (p1 - 2) * p2, 0, 0},
      {p3, 2 * (p1 - 1) * p3, 2 + 2 * (p1 - 2) * p3, 4 + 4 * (p1 - 2) * p3, 2 * (p2 - 1) * p3,
       2 * (p1 - 1) * (p2 - 1) * p3},
      {p2 * p3, 2 * p3 + 2 * (p1 - 2) * p2 * p3, 2 * p2 + 2 * (p1 - 2) * p2 * p3, 0, 0, 0},
      {p3, 2 * (p1 - 1) * p3, 2 * (p1 - 1) * p3, 4 * (p1 - 1) * p3, 2 + 2 * (p2 - 2) * p3,
       2 * (p1 - 1) * (p2 - 1) * p3},
      {p3, 2 * (p1 - 1) * p3, 2 * (p1 - 1) * p3, 4 * (p1 - 1) * p3, 2 * (p2 - 1) * p3,
       2 + 2 * (p1 * p2 - p1 - p2) * p3},
  };
  return t[row - 1][col - 1];
}

ThreePrimeTable three_prime_table(u64 p1, u64 p2, u64 p3) {
  for (u64 p : {p1, p2, p3}) require_prime(p);
  if (!(p1 < p2 && p2 < p3)) throw Error(Errc::InvalidArgument, "need p1 < p2 < p3");
  require_congruent_one(p2, p1);
  require_congruent_one(p3, p1);
  require_congruent_one(p3, p2);

  ThreePrimeTable t;
  t.p1 = p1;
  t.p2 = p2;
  t.p3 = p3;
  t.general = count_matrix(p1 * p2 * p3);
  const std::size_t size = t.general.classes.size();
  for (const auto& g : t.general.classes) t.types.push_back(three_prime_type(g, p1, p2, p3));
  t.closed.assign(size, std::vector<BigInt>(size));
  t.same_or_hat.assign(size, std::vector<bool>(size, false));
  t.agrees = size == p1 + 4;
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      bool hat = false;
      if (p1 > 2 && t.types[r] == 4 && t.types[c] == 4) {
        hat = is_same_or_hat(t.general.classes[r], t.general.classes[c], p2, p3);
      }
      t.same_or_hat[r][c] = hat;
      t.closed[r][c] = three_prime_closed_form(t.types[r], t.types[c], p1, p2, p3, hat);
      t.agrees = t.agrees && t.closed[r][c] == t.general.cells[r][c];
    }
  }
  return t;
}

SevenPrimeExample seven_prime_example() {
  constexpr u64 primes[4] = {43, 127, 211, 337};
  constexpr u64 bases[4] = {3, 5, 26, 21};
  // exponents of the bases giving k mod each prime
  constexpr u64 exps[4][4] = {
      {21, 14, 6, 2},
      {21, 14, 12, 2},
      {1, 2, 3, 6},
      {21, 6, 6, 3},
  };
  SevenPrimeExample ex;
  ex.n = 2ULL * 3 * 7 * 43 * 127 * 211 * 337;
  const u64 g = 43ULL * 127 * 211 * 337;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Congruence> parts;
    for (std::size_t j = 0; j < 4; ++j) {
      parts.push_back({mod_pow(bases[j], exps[i][j], primes[j]), primes[j]});
    }
    const bool central_three = i == 3;  // k == 1 mod 3, d = 14, e = 3g
    if (central_three) parts.push_back({1, 3});
    const u64 e = central_three ? 3 * g : g;
    const u64 d = ex.n / e;
    ex.groups[i] = make_group(d, e, crt_combine(parts).residue);
  }
  return ex;
}

}  // namespace hgsq

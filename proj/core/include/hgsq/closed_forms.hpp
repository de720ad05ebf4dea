#pragma once

// Closed-form count tables for orders with two or three prime factors, and
// the seven-prime worked example, each paired with the general count so the
// two can be compared cell by cell.

#include <array>
#include <cstdint>
#include <vector>

#include "hgsq/bigint.hpp"
#include "hgsq/groups.hpp"

namespace hgsq {

struct CountMatrix {
  std::vector<GroupSpec> classes;          // rows (Gamma) and columns (G)
  std::vector<std::vector<BigInt>> cells;  // cells[row][col] = e(row, col)
};

struct TwoPrimeTable {
  u64 p = 0;
  u64 q = 0;
  CountMatrix general;                      // from count_hgs, classes {C_pq, C_p x| C_q}
  std::array<std::array<BigInt, 2>, 2> closed{};
  bool agrees = false;
};

/// n = p q with p == 1 (mod q): [[1, 2(q-1)], [p, 2p(q-2) + 2]].
/// Throws CongruenceUnsatisfied (or InvalidArgument for non-primes).
TwoPrimeTable two_prime_table(u64 p, u64 q);

/// Factorization type (1..6) of a group of order p1 p2 p3, by (d, g, z):
/// 1: d=1; 2: d=p1,g=p2; 3: d=p1,g=p3; 4: d=p1,g=p2p3; 5: d=p2,g=p3; 6: d=p1p2,g=p3.
int three_prime_type(const GroupSpec& g, u64 p1, u64 p2, u64 p3);

/// For two type-4 groups with p1 > 2: whether G is isomorphic to Gamma or to
/// Gamma-hat, where Gamma-hat uses kappa-hat == kappa (mod p2) and
/// kappa-hat == kappa^-1 (mod p3).
bool is_same_or_hat(const GroupSpec& galois, const GroupSpec& type, u64 p2, u64 p3);

/// Closed-form value for the pair of types; `same_or_hat` only matters for
/// (4, 4) with p1 > 2.
BigInt three_prime_closed_form(int galois_type, int type_type, u64 p1, u64 p2, u64 p3,
                               bool same_or_hat);

struct ThreePrimeTable {
  u64 p1 = 0, p2 = 0, p3 = 0;
  CountMatrix general;
  std::vector<int> types;                        // per class
  std::vector<std::vector<BigInt>> closed;       // closed forms per cell
  std::vector<std::vector<bool>> same_or_hat;    // (4,4) cells only, p1 > 2
  bool agrees = false;
};

/// p1 < p2 < p3 primes with p_i == 1 (mod p_j) for i > j. Throws
/// CongruenceUnsatisfied otherwise.
ThreePrimeTable three_prime_table(u64 p1, u64 p2, u64 p3);

/// Full matrix e(Gamma, G) over all classes of order n (rows and columns in
/// enumerate_groups order). Cells are evaluated on `threads` workers.
CountMatrix count_matrix(u64 n, unsigned threads = 1);

/// The order n = 2*3*7*43*127*211*337 example: four groups with
/// g = 43*127*211*337, specified by residues of k as powers of elements of
/// order 42 (3 mod 43, 5 mod 127, 26 mod 211, 21 mod 337).
struct SevenPrimeExample {
  u64 n = 0;
  std::array<GroupSpec, 4> groups;
};

SevenPrimeExample seven_prime_example();

}  // namespace hgsq

#pragma once

// Groups of squarefree order.
//
// Every group of squarefree order n is metacyclic,
//
//   G(d, e, k) = < sigma, tau | sigma^e = tau^d = 1, tau sigma tau^-1 = sigma^k >
//
// with n = d*e, gcd(d, e) = 1 and ord_e(k) = d, and two such groups are
// isomorphic exactly when d and e agree and k, k' generate the same cyclic
// subgroup of Z_e^x. A GroupSpec always stores the canonical k: the smallest
// generator of <k>.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hgsq/modarith.hpp"

namespace hgsq {

struct GroupSpec {
  u64 n = 1;
  u64 d = 1;  // order of tau
  u64 e = 1;  // order of sigma
  u64 k = 0;  // canonical residue mod e (0 only when e == 1)
  Factorization d_factors;
  Factorization e_factors;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.d == b.d && a.e == b.e && a.k == b.k;
  }
  friend std::strong_ordering operator<=>(const GroupSpec& a, const GroupSpec& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    if (auto c = a.e <=> b.e; c != 0) return c;
    return a.k <=> b.k;
  }

  bool is_cyclic() const noexcept { return d == 1; }
  std::string triple() const;  // "d,e,k"
};

/// Parameters derived from (d, e, k).
struct DerivedParams {
  u64 z = 1;                       // gcd(k - 1, e) = |Z(G)|
  u64 g = 1;                       // e / z = |G'|, always odd
  Factorization z_factors;
  Factorization g_factors;
  std::map<u64, u64> local_order;  // q | e  ->  ord_q(k)
};

/// sigma^i tau^j.
struct GElement {
  u64 i = 0;  // mod e
  u64 j = 0;  // mod d

  friend bool operator==(const GElement&, const GElement&) = default;
};

/// Validates and canonicalizes (d, e, k). Throws NotSquarefree, NotCoprime or
/// InvalidOrder (ord_e(k) != d, including non-units).
GroupSpec make_group(u64 d, u64 e, u64 k, u64 factor_bound = kDefaultFactorBound);

/// Smallest generator of the cyclic subgroup <k> of Z_e^x, where ord_e(k) = d.
u64 canonical_generator(u64 k, u64 e, u64 d);

DerivedParams derived_params(const GroupSpec& g);

bool is_isomorphic(const GroupSpec& a, const GroupSpec& b) noexcept;

/// All isomorphism classes of order n, sorted by (d, e, k).
std::vector<GroupSpec> enumerate_groups(u64 n, u64 factor_bound = kDefaultFactorBound);

/// Number of isomorphism classes of order n, without materializing them.
u64 count_groups(u64 n, u64 factor_bound = kDefaultFactorBound);

/// (i, j) * (i', j') = (i + k^j i', j + j').
GElement g_mul(const GroupSpec& g, GElement x, GElement y) noexcept;

/// (|Z(G)|, |G'|) = (z, g).
std::pair<u64, u64> center_and_commutator_orders(const GroupSpec& g);

/// Element arithmetic with k^j and 1 + k + ... + k^(j-1) cached for j < d.
/// Used by the holomorph and by the brute-force oracles.
class MetacyclicGroup {
 public:
  explicit MetacyclicGroup(const GroupSpec& spec);

  const GroupSpec& spec() const noexcept { return spec_; }
  u64 order() const noexcept { return spec_.n; }

  GElement identity() const noexcept { return {}; }
  GElement mul(GElement x, GElement y) const noexcept;
  GElement inv(GElement x) const noexcept;
  GElement pow(GElement x, u64 j) const noexcept;

  /// k^j mod e, j reduced mod d.
  u64 k_pow(u64 j) const noexcept { return k_pows_[j % spec_.d]; }
  /// S(k, j) = sum_{h<j} k^h mod e, for 0 <= j < d.
  u64 k_geom(u64 j) const noexcept { return k_geoms_[j]; }

  /// Dense index in [0, n).
  u64 index(GElement x) const noexcept { return x.j * spec_.e + x.i; }
  GElement element(u64 index) const noexcept { return {index % spec_.e, index / spec_.e}; }

 private:
  GroupSpec spec_;
  std::vector<u64> k_pows_;
  std::vector<u64> k_geoms_;
};

}  // namespace hgsq

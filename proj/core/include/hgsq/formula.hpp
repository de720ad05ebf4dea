#pragma once

// Exact count of Hopf-Galois structures e(Gamma, G) for groups of squarefree
// order, together with every intermediate quantity of the count.
//
// Notation: the Galois group is Gamma = G(delta, epsilon, kappa) with
// zeta = gcd(kappa - 1, epsilon), gamma = epsilon / zeta and local orders
// rho_q = ord_q(kappa); the type is G = G(d, e, k) with z, g and r_q.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgsq/bigint.hpp"
#include "hgsq/groups.hpp"
#include "hgsq/modarith.hpp"

namespace hgsq {

/// The primes q | e, split by which side of Gamma they live on (gamma versus
/// zeta*delta), whether they are central in G (z versus g), and whether the
/// local orders of kappa and k coincide.
struct PrimeClasses {
  std::vector<u64> commutator_central;    // q | gcd(gamma, z)
  std::vector<u64> abelian_central;       // q | gcd(zeta*delta, z)
  std::vector<u64> mismatched;            // q | gcd(gamma, g), rho_q != r_q
  std::vector<u64> matched;               // q | gcd(gamma, g), rho_q == r_q > 2
  std::vector<u64> matched_involution;    // q | gcd(gamma, g), rho_q == r_q == 2
  std::vector<u64> abelian_commutator;    // q | gcd(zeta*delta, g)
};

struct PairContext {
  GroupSpec galois;  // Gamma
  GroupSpec type;    // G
  DerivedParams galois_params;  // (zeta, gamma, rho_q) as (z, g, local_order)
  DerivedParams type_params;    // (z, g, r_q)

  bool compatible = false;      // gamma | e
  u64 orbit_count = 1;          // w = phi(gcd(delta, d))
  u64 orbit_modulus = 1;        // gcd(delta, d)

  // Per-orbit data, indexed h = 0 .. w-1. Empty when !compatible.
  std::vector<u64> orbit_reps;  // kappa_h mod epsilon
  PrimeClasses primes;
  std::vector<std::vector<u64>> matched_plus;   // q in S with kappa_h == k   (mod q)
  std::vector<std::vector<u64>> matched_minus;  // q in S with kappa_h == k^-1 (mod q)

  u64 gamma() const noexcept { return galois_params.g; }
  u64 zeta() const noexcept { return galois_params.z; }
  u64 delta() const noexcept { return galois.d; }

  /// Primes q in S with kappa_h == k^{+-1} mod q.
  std::vector<u64> matched_at(std::size_t h) const;
};

/// Builds the context with the deterministic orbit representatives: for each
/// j in Z_{gcd(delta,d)}^x (ascending) the smallest J >= 1 with
/// J == j (mod gcd(delta, d)) and gcd(J, delta) = 1, representative kappa^J;
/// when gcd(delta, d) > 2 the second half is replaced by inverses so that
/// kappa_{w+1-h} = kappa_h^-1. Throws OrderMismatch.
PairContext build_context(const GroupSpec& galois, const GroupSpec& type);

/// Same, but with caller-chosen representatives (one per Delta-orbit, in the
/// orbit order of build_context). Used to test representative independence.
PairContext build_context_with_reps(const GroupSpec& galois, const GroupSpec& type,
                                    std::vector<u64> reps);

/// Multiplies each representative by a Delta-element: kappa_h -> kappa_h^m
/// with m in Z_delta^x, m == 1 mod gcd(delta, d). Returns the new list.
std::vector<u64> reselect_in_orbits(const PairContext& ctx, const std::vector<u64>& exponents);

/// Elements of Delta = { m in Z_delta^x : m == 1 mod gcd(delta, d) }.
std::vector<u64> delta_subgroup(const PairContext& ctx);

/// |N_h| = phi(e) 2^omega(g) g gamma prod_T 1/q prod_{S_h} (q+1)/(2q).
/// Throws Incompatible when gamma does not divide e.
BigInt count_Nh(const PairContext& ctx, std::size_t h);

/// e'(Gamma, G): the number of regular subgroups of Hol(G) isomorphic to
/// Gamma, sum_h |F_h| with |F_h| = phi(delta) |N_h| / (gamma phi(e) w).
/// Zero for incompatible pairs.
BigInt count_regular_subgroups(const PairContext& ctx);

/// |F_h| for one orbit.
BigInt count_family(const PairContext& ctx, std::size_t h);

enum class CountStatus { Ok, Incompatible };

struct CountReport {
  CountStatus status = CountStatus::Ok;
  std::vector<BigInt> nh;       // |N_h|
  std::vector<BigInt> family;   // |F_h|
  BigInt regular_subgroups;     // e'
  BigInt hgs;                   // e(Gamma, G)
  BigInt aut_galois;            // |Aut Gamma|
  BigInt aut_type;              // |Aut G|
};

/// Evaluates both routes to e(Gamma, G): the closed formula and
/// |Aut Gamma| / |Aut G| * e'. Throws NonIntegralResult if either leaves a
/// denominator, or if they disagree.
CountReport count_report(const PairContext& ctx);

/// e(Gamma, G). Throws OrderMismatch.
BigInt count_hgs(const GroupSpec& galois, const GroupSpec& type);
BigInt count_hgs(const PairContext& ctx);

/// |Aut G| = g phi(e).
u64 aut_order(const GroupSpec& g);

/// e(C_n, G) = 2^omega(g) phi(d).
BigInt cyclic_source_count(const GroupSpec& type);
/// e(Gamma, C_n) = gamma.
BigInt cyclic_type_count(const GroupSpec& galois);

/// The dihedral group D_2m = G(2, m, m - 1), m odd squarefree and m >= 3.
GroupSpec dihedral_group(u64 m);

/// e(D_2m, G): m if d = 1, 2^omega(g) m / g if d = 2, 0 otherwise.
/// Throws NotOddSquarefree or OrderMismatch.
BigInt dihedral_source_count(u64 m, const GroupSpec& type);
/// e(Gamma, D_2m) = 2^omega(m) gamma prod_{q | gamma, rho_q = 2} 1/q.
BigInt dihedral_type_count(const GroupSpec& galois, u64 m);

}  // namespace hgsq

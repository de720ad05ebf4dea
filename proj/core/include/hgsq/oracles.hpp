#pragma once

// Brute-force verifiers at desk scale.
//
// Everything here works from first principles in Hol(G) (element-by-element
// multiplication and orbit computations) or from the per-prime congruence
// table, and never calls the closed formulas. They exist to check the
// formulas, so bounds are hard errors rather than silent sampling.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgsq/bigint.hpp"
#include "hgsq/formula.hpp"
#include "hgsq/groups.hpp"
#include "hgsq/holomorph.hpp"

namespace hgsq {

/// Coordinates of X = [sigma^a, theta^c], Y = [sigma^u tau, theta^v phi_t].
struct Quintuple {
  u64 t = 1;  // unit mod e
  u64 a = 0;  // mod e
  u64 c = 0;  // mod g
  u64 u = 0;  // mod e
  u64 v = 0;  // mod g

  friend bool operator==(const Quintuple&, const Quintuple&) = default;
};

std::string to_string(const Quintuple& q);

/// lambda = z^-1 (k - 1) and mu = k^-1 z^-1 (k - 1), both units mod g.
struct TableConstants {
  u64 lambda = 0;
  u64 mu = 0;
};

TableConstants table_constants(const GroupSpec& type);

struct OracleConfig {
  u64 candidate_bound = 100'000'000;  // quintuples per enumeration
  u64 hol_order_bound = 100'000;      // |Hol(G)| for the subgroup census
  u64 max_group_order = 255;          // n for element-level oracles
  unsigned threads = 1;
};

enum class CensusMethod { QuintupleSemantic, QuintupleTable, SubgroupCensus, AutCensus, IsoCensus };

std::string_view census_method_name(CensusMethod m) noexcept;

struct CensusResult {
  BigInt count;
  CensusMethod method = CensusMethod::QuintupleTable;
  u64 candidates_examined = 0;
};

/// Which row of the per-prime membership table applies to q | e for orbit h.
enum class PrimeRow {
  CommutatorCentral,  // q | gcd(gamma, z)
  AbelianCentral,     // q | gcd(zeta delta, z)
  Unmatched,          // q in R, or q in S but not S_h
  MatchedPlus,        // S_h^+
  MatchedMinus,       // S_h^-
  Involution,         // T
  AbelianCommutator,  // q | gcd(zeta delta, g)
};

PrimeRow prime_row(const PairContext& ctx, std::size_t h, u64 q);

/// Size of the row's solution set mod q, as tabulated:
/// q(q-1), q-1, 2q^2(q-1), q(q^2-1), q(q^2-1), 2q(q-1), 2q(q-1).
u64 prime_row_count(PrimeRow row, u64 q);

/// Local residues mod q of a quintuple. c and v are ignored when q | z.
struct LocalQuintuple {
  u64 t, a, c, u, v;
};

/// One row of the table at a fixed prime, with its residues reduced once.
class LocalRowCheck {
 public:
  LocalRowCheck(const PairContext& ctx, std::size_t h, u64 q, const TableConstants& constants);

  PrimeRow row() const noexcept { return row_; }
  u64 prime() const noexcept { return q_; }
  bool operator()(const LocalQuintuple& x) const noexcept;

 private:
  PrimeRow row_;
  u64 q_, kappa_, k_inv_, kappa_over_k_, lambda_, mu_;
};

/// Membership test at one prime (one row of the table).
bool local_row_admits(const PairContext& ctx, std::size_t h, u64 q, const LocalQuintuple& x,
                      const TableConstants& constants);

/// Conjunction of the rows for every q | e, for repeated use at one h.
class TableQuintupleCheck {
 public:
  TableQuintupleCheck(const PairContext& ctx, std::size_t h, const TableConstants& constants);

  bool operator()(const Quintuple& x) const noexcept;

 private:
  std::vector<LocalRowCheck> rows_;
};

/// Conjunction of local_row_admits over all q | e.
bool quintuple_table(const PairContext& ctx, std::size_t h, const Quintuple& x,
                     const TableConstants& constants);
bool quintuple_table(const PairContext& ctx, std::size_t h, const Quintuple& x);

/// Direct check in Hol(G): Y X Y^-1 = X^kappa_h, <X> regular on
/// {sigma^(e m / gamma)}, <X, Y^d> transitive on {sigma^m}, and Y^(zeta delta) = 1.
/// Throws BoundExceeded when n exceeds config.max_group_order.
class SemanticQuintupleCheck {
 public:
  SemanticQuintupleCheck(const PairContext& ctx, const OracleConfig& config = {});

  bool operator()(std::size_t h, const Quintuple& x) const;
  const Holomorph& holomorph() const noexcept { return hol_; }

 private:
  bool orbit_is(std::span<const HolElement> gens, u64 step) const;

  const PairContext* ctx_;
  Holomorph hol_;
};

bool quintuple_semantic(const PairContext& ctx, std::size_t h, const Quintuple& x,
                        const OracleConfig& config = {});

enum class QuintuplePredicate { Semantic, Table };

/// Exhaustive |N_h| over Z_e^x x Z_e x Z_g x Z_e x Z_g. Throws BoundExceeded.
CensusResult enumerate_Nh(const PairContext& ctx, std::size_t h, QuintuplePredicate predicate,
                          const OracleConfig& config = {},
                          std::optional<TableConstants> constants = std::nullopt);

/// Runs both predicates on every quintuple.
struct PredicateComparison {
  u64 examined = 0;
  u64 table_count = 0;
  u64 semantic_count = 0;
  std::optional<Quintuple> first_mismatch;  // smallest in (t, a, c, u, v) order
};

PredicateComparison compare_predicates(const PairContext& ctx, std::size_t h,
                                       const OracleConfig& config = {},
                                       std::optional<TableConstants> constants = std::nullopt);

/// Regular subgroups of Hol(G) isomorphic to Gamma, found by pairing elements
/// of orders epsilon and delta, checking the defining relation, closing under
/// multiplication and keeping order-n transitive subgroups.
struct SubgroupCensus {
  CensusResult result;
  std::vector<std::vector<HolElement>> subgroups;  // each sorted by encode()
};

SubgroupCensus regular_subgroup_census_full(const GroupSpec& galois, const GroupSpec& type,
                                            const OracleConfig& config = {});
CensusResult regular_subgroup_census(const GroupSpec& galois, const GroupSpec& type,
                                     const OracleConfig& config = {});

/// Number of generating pairs (X, Y) of `subgroup` in the special form with
/// X^gamma = Y^(zeta delta) = 1 and Y X Y^-1 = X^kappa_h for some h.
u64 special_generator_pairs(const PairContext& ctx, const Holomorph& hol,
                            const std::vector<HolElement>& subgroup);

/// Pairs (x, y) in G x G satisfying the defining relations and generating G.
CensusResult aut_census(const GroupSpec& g, const OracleConfig& config = {});

/// Isomorphism classes among all valid (d, e, k), by searching for generator
/// images between the realized groups.
CensusResult iso_class_census(u64 n, const OracleConfig& config = {});

}  // namespace hgsq

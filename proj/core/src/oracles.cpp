#include "hgsq/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "hgsq/error.hpp"
#include "hgsq/parallel.hpp"

namespace hgsq {

namespace {

bool contains(const std::vector<u64>& v, u64 x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

void require_order_bound(u64 n, const OracleConfig& config) {
  if (n > config.max_group_order) {
    throw Error(Errc::BoundExceeded, "group order " + std::to_string(n) + " exceeds oracle bound " +
                                         std::to_string(config.max_group_order));
  }
}

void require_compatible(const PairContext& ctx) {
  if (!ctx.compatible) throw Error(Errc::Incompatible, "gamma does not divide e");
}

std::vector<u64> units_mod(u64 m) {
  if (m == 1) return {0};
  std::vector<u64> out;
  for (u64 t = 1; t < m; ++t) {
    if (gcd(t, m) == 1) out.push_back(t);
  }
  return out;
}

u64 quintuple_space(const PairContext& ctx, const OracleConfig& config) {
  const u64 e = ctx.type.e;
  const u64 g = ctx.type_params.g;
  const u128 size =
      static_cast<u128>(euler_phi(ctx.type.e_factors)) * e * e * g * g;
  if (size > config.candidate_bound) {
    throw Error(Errc::BoundExceeded, "quintuple space exceeds candidate bound " +
                                         std::to_string(config.candidate_bound));
  }
  return static_cast<u64>(size);
}

bool lex_less(const Quintuple& x, const Quintuple& y) {
  return std::tie(x.t, x.a, x.c, x.u, x.v) < std::tie(y.t, y.a, y.c, y.u, y.v);
}

}  // namespace

std::string to_string(const Quintuple& q) {
  return "(t=" + std::to_string(q.t) + ", a=" + std::to_string(q.a) + ", c=" + std::to_string(q.c) +
         ", u=" + std::to_string(q.u) + ", v=" + std::to_string(q.v) + ")";
}

std::string_view census_method_name(CensusMethod m) noexcept {
  switch (m) {
    case CensusMethod::QuintupleSemantic: return "quintuple_semantic";
    case CensusMethod::QuintupleTable: return "quintuple_table";
    case CensusMethod::SubgroupCensus: return "subgroup_census";
    case CensusMethod::AutCensus: return "aut_census";
    case CensusMethod::IsoCensus: return "iso_census";
  }
  return "unknown";
}

TableConstants table_constants(const GroupSpec& type) {
  const DerivedParams p = derived_params(type);
  TableConstants c;
  if (p.g == 1) return c;
  c.lambda = mul_mod(mod_inv(p.z % p.g, p.g), (type.k + p.g - 1) % p.g, p.g);
  c.mu = mul_mod(mod_inv(type.k % p.g, p.g), c.lambda, p.g);
  return c;
}

PrimeRow prime_row(const PairContext& ctx, std::size_t h, u64 q) {
  const PrimeClasses& pc = ctx.primes;
  if (contains(pc.commutator_central, q)) return PrimeRow::CommutatorCentral;
  if (contains(pc.abelian_central, q)) return PrimeRow::AbelianCentral;
  if (contains(pc.abelian_commutator, q)) return PrimeRow::AbelianCommutator;
  if (contains(pc.matched_involution, q)) return PrimeRow::Involution;
  if (contains(ctx.matched_plus.at(h), q)) return PrimeRow::MatchedPlus;
  if (contains(ctx.matched_minus.at(h), q)) return PrimeRow::MatchedMinus;
  if (contains(pc.matched, q) || contains(pc.mismatched, q)) return PrimeRow::Unmatched;
  throw Error(Errc::InvalidArgument, std::to_string(q) + " does not divide e");
}

u64 prime_row_count(PrimeRow row, u64 q) {
  switch (row) {
    case PrimeRow::CommutatorCentral: return q * (q - 1);
    case PrimeRow::AbelianCentral: return q - 1;
    case PrimeRow::Unmatched: return 2 * q * q * (q - 1);
    case PrimeRow::MatchedPlus:
    case PrimeRow::MatchedMinus: return q * (q * q - 1);
    case PrimeRow::Involution:
    case PrimeRow::AbelianCommutator: return 2 * q * (q - 1);
  }
  return 0;
}

LocalRowCheck::LocalRowCheck(const PairContext& ctx, std::size_t h, u64 q,
                             const TableConstants& constants)
    : row_(prime_row(ctx, h, q)), q_(q) {
  kappa_ = ctx.orbit_reps.at(h) % q;
  const u64 k = ctx.type.k % q;
  k_inv_ = k == 0 ? 0 : mod_inv(k, q);
  kappa_over_k_ = mul_mod(kappa_, k_inv_, q);
  lambda_ = constants.lambda % q;
  mu_ = constants.mu % q;
}

bool LocalRowCheck::operator()(const LocalQuintuple& x) const noexcept {
  const u64 q = q_;
  const u64 t = x.t % q, a = x.a % q, c = x.c % q, u = x.u % q, v = x.v % q;
  const bool a_nonzero = a != 0;
  const bool c_is_lambda_a = c == mul_mod(lambda_, a, q);
  const bool v_is_mu_u = v == mul_mod(mu_, u, q);

  switch (row_) {
    case PrimeRow::CommutatorCentral:
      return t == kappa_ && a_nonzero;
    case PrimeRow::AbelianCentral:
      return t == 1 % q && a == 0 && u != 0;
    case PrimeRow::Unmatched:
      return a_nonzero && ((t == kappa_ && c_is_lambda_a) || (t == kappa_over_k_ && c == 0));
    case PrimeRow::MatchedPlus:
      return a_nonzero &&
             ((t == kappa_over_k_ && c == 0 && v == 0) || (t == kappa_ && c_is_lambda_a));
    case PrimeRow::MatchedMinus:
      return a_nonzero &&
             ((t == kappa_ && c_is_lambda_a && v_is_mu_u) || (t == kappa_over_k_ && c == 0));
    case PrimeRow::Involution:
      return a_nonzero && ((t == kappa_ && c_is_lambda_a && v_is_mu_u) ||
                           (t == kappa_over_k_ && c == 0 && v == 0));
    case PrimeRow::AbelianCommutator:
      return a == 0 && c == 0 && ((t == 1 && v != 0) || (t == k_inv_ && !v_is_mu_u));
  }
  return false;
}

bool local_row_admits(const PairContext& ctx, std::size_t h, u64 q, const LocalQuintuple& x,
                      const TableConstants& constants) {
  return LocalRowCheck(ctx, h, q, constants)(x);
}

TableQuintupleCheck::TableQuintupleCheck(const PairContext& ctx, std::size_t h,
                                         const TableConstants& constants) {
  require_compatible(ctx);
  for (u64 q : ctx.type.e_factors.primes) rows_.emplace_back(ctx, h, q, constants);
}

bool TableQuintupleCheck::operator()(const Quintuple& x) const noexcept {
  const LocalQuintuple local{x.t, x.a, x.c, x.u, x.v};
  for (const LocalRowCheck& row : rows_) {
    if (!row(local)) return false;
  }
  return true;
}

bool quintuple_table(const PairContext& ctx, std::size_t h, const Quintuple& x,
                     const TableConstants& constants) {
  return TableQuintupleCheck(ctx, h, constants)(x);
}

bool quintuple_table(const PairContext& ctx, std::size_t h, const Quintuple& x) {
  return quintuple_table(ctx, h, x, table_constants(ctx.type));
}

SemanticQuintupleCheck::SemanticQuintupleCheck(const PairContext& ctx, const OracleConfig& config)
    : ctx_(&ctx), hol_((require_compatible(ctx), require_order_bound(ctx.type.n, config), ctx.type)) {}

bool SemanticQuintupleCheck::orbit_is(std::span<const HolElement> gens, u64 step) const {
  const MetacyclicGroup& grp = hol_.group();
  thread_local std::vector<char> seen;
  thread_local std::vector<u64> queue;
  seen.assign(grp.order(), 0);
  queue.clear();
  queue.push_back(grp.index(grp.identity()));
  seen[queue.back()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const GElement y = grp.element(queue[head]);
    for (const HolElement& x : gens) {
      const GElement img = hol_.act(x, y);
      if (img.j != 0 || img.i % step != 0) return false;
      const u64 idx = grp.index(img);
      if (!seen[idx]) {
        seen[idx] = 1;
        queue.push_back(idx);
      }
    }
  }
  return queue.size() == hol_.spec().e / step;
}

bool SemanticQuintupleCheck::operator()(std::size_t h, const Quintuple& q5) const {
  const PairContext& ctx = *ctx_;
  const u64 e = ctx.type.e;
  const u64 d = ctx.type.d;
  const u64 g = hol_.g();
  const u64 one = 1 % e;
  const HolElement x{q5.a % e, 0, q5.c % g, one};
  const HolElement y{q5.u % e, 1 % d, q5.v % g, q5.t % e};

  if (hol_.mul(hol_.mul(y, x), hol_.inv(y)) != hol_.pow(x, ctx.orbit_reps.at(h))) return false;
  if (!hol_.is_identity(hol_.pow(x, ctx.gamma()))) return false;
  if (!hol_.is_identity(hol_.pow(y, ctx.zeta() * ctx.delta()))) return false;
  const HolElement just_x[] = {x};
  if (!orbit_is(just_x, e / ctx.gamma())) return false;
  const HolElement both[] = {x, hol_.pow(y, d)};
  return orbit_is(both, 1);
}

bool quintuple_semantic(const PairContext& ctx, std::size_t h, const Quintuple& x,
                        const OracleConfig& config) {
  return SemanticQuintupleCheck(ctx, config)(h, x);
}

namespace {

// Visits every quintuple with t = units[ti], in (a, c, u, v) order.
template <typename Visit>
void for_each_with_t(const PairContext& ctx, u64 t, Visit&& visit) {
  const u64 e = ctx.type.e;
  const u64 g = ctx.type_params.g;
  Quintuple x;
  x.t = t;
  for (x.a = 0; x.a < e; ++x.a) {
    for (x.c = 0; x.c < g; ++x.c) {
      for (x.u = 0; x.u < e; ++x.u) {
        for (x.v = 0; x.v < g; ++x.v) visit(x);
      }
    }
  }
}

}  // namespace

CensusResult enumerate_Nh(const PairContext& ctx, std::size_t h, QuintuplePredicate predicate,
                          const OracleConfig& config, std::optional<TableConstants> constants) {
  require_compatible(ctx);
  if (h >= ctx.orbit_reps.size()) throw Error(Errc::InvalidArgument, "orbit index out of range");
  const u64 space = quintuple_space(ctx, config);
  const TableConstants tc = constants.value_or(table_constants(ctx.type));
  std::optional<SemanticQuintupleCheck> semantic;
  if (predicate == QuintuplePredicate::Semantic) semantic.emplace(ctx, config);
  const TableQuintupleCheck table(ctx, h, tc);

  const std::vector<u64> units = units_mod(ctx.type.e);
  std::vector<u64> counts(units.size(), 0);
  parallel_for(units.size(), config.threads, [&](std::size_t ti) {
    u64 count = 0;
    for_each_with_t(ctx, units[ti], [&](const Quintuple& x) {
      const bool ok = semantic ? (*semantic)(h, x) : table(x);
      count += ok ? 1 : 0;
    });
    counts[ti] = count;
  });

  CensusResult r;
  r.method = semantic ? CensusMethod::QuintupleSemantic : CensusMethod::QuintupleTable;
  r.candidates_examined = space;
  for (u64 c : counts) r.count += c;
  return r;
}

PredicateComparison compare_predicates(const PairContext& ctx, std::size_t h,
                                       const OracleConfig& config,
                                       std::optional<TableConstants> constants) {
  require_compatible(ctx);
  if (h >= ctx.orbit_reps.size()) throw Error(Errc::InvalidArgument, "orbit index out of range");
  const u64 space = quintuple_space(ctx, config);
  const TableConstants tc = constants.value_or(table_constants(ctx.type));
  const SemanticQuintupleCheck semantic(ctx, config);
  const TableQuintupleCheck table(ctx, h, tc);

  struct Slot {
    u64 table = 0;
    u64 semantic = 0;
    std::optional<Quintuple> mismatch;
  };
  const std::vector<u64> units = units_mod(ctx.type.e);
  std::vector<Slot> slots(units.size());
  parallel_for(units.size(), config.threads, [&](std::size_t ti) {
    Slot& s = slots[ti];
    for_each_with_t(ctx, units[ti], [&](const Quintuple& x) {
      const bool by_table = table(x);
      const bool by_semantic = semantic(h, x);
      s.table += by_table ? 1 : 0;
      s.semantic += by_semantic ? 1 : 0;
      if (by_table != by_semantic && !s.mismatch) s.mismatch = x;
    });
  });

  PredicateComparison out;
  out.examined = space;
  for (const Slot& s : slots) {
    out.table_count += s.table;
    out.semantic_count += s.semantic;
    if (s.mismatch && (!out.first_mismatch || lex_less(*s.mismatch, *out.first_mismatch))) {
      out.first_mismatch = s.mismatch;
    }
  }
  return out;
}

namespace {

// <gens> by closure under right multiplication. Empty when it exceeds `cap`.
std::vector<HolElement> closure(const Holomorph& hol, std::span<const HolElement> gens, u64 cap) {
  std::unordered_set<u64> seen;
  std::vector<HolElement> elems{hol.identity()};
  seen.insert(hol.encode(elems[0]));
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const HolElement& s : gens) {
      const HolElement next = hol.mul(elems[head], s);
      if (seen.insert(hol.encode(next)).second) {
        if (elems.size() == cap) return {};
        elems.push_back(next);
      }
    }
  }
  return elems;
}

bool is_transitive(const Holomorph& hol, const std::vector<HolElement>& subgroup) {
  const MetacyclicGroup& grp = hol.group();
  std::vector<char> hit(grp.order(), 0);
  u64 distinct = 0;
  for (const HolElement& x : subgroup) {
    const u64 idx = grp.index(hol.act(x, grp.identity()));
    if (!hit[idx]) {
      hit[idx] = 1;
      ++distinct;
    }
  }
  return distinct == grp.order();
}

}  // namespace

SubgroupCensus regular_subgroup_census_full(const GroupSpec& galois, const GroupSpec& type,
                                            const OracleConfig& config) {
  if (galois.n != type.n) {
    throw Error(Errc::OrderMismatch, std::to_string(galois.n) + " != " + std::to_string(type.n));
  }
  require_order_bound(type.n, config);
  const Holomorph hol(type);
  if (hol.size() > config.hol_order_bound) {
    throw Error(Errc::BoundExceeded, "|Hol(G)| = " + std::to_string(hol.size()) +
                                         " exceeds bound " + std::to_string(config.hol_order_bound));
  }
  const std::vector<HolElement> elems = hol.elements();
  std::vector<u64> orders(elems.size());
  parallel_for(elems.size(), config.threads,
               [&](std::size_t i) { orders[i] = hol.element_order(elems[i]); });

  std::vector<std::size_t> p_idx, q_idx;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (orders[i] == galois.e) p_idx.push_back(i);
    if (orders[i] == galois.d) q_idx.push_back(i);
  }
  std::vector<HolElement> q_inv(q_idx.size());
  for (std::size_t j = 0; j < q_idx.size(); ++j) q_inv[j] = hol.inv(elems[q_idx[j]]);

  // Relation check first; closures only for surviving pairs.
  std::vector<std::vector<std::size_t>> partners(p_idx.size());
  parallel_for(p_idx.size(), config.threads, [&](std::size_t pi) {
    const HolElement& p = elems[p_idx[pi]];
    const HolElement target = hol.pow(p, galois.k);
    for (std::size_t qj = 0; qj < q_idx.size(); ++qj) {
      const HolElement& q = elems[q_idx[qj]];
      if (hol.mul(hol.mul(q, p), q_inv[qj]) == target) partners[pi].push_back(qj);
    }
  });

  SubgroupCensus census;
  census.result.method = CensusMethod::SubgroupCensus;
  census.result.candidates_examined = static_cast<u64>(p_idx.size()) * q_idx.size();
  std::set<std::vector<u64>> keys;
  std::unordered_map<u64, std::vector<std::size_t>> member_of;  // code -> subgroup ids

  auto share_subgroup = [&](u64 a, u64 b) {
    auto ia = member_of.find(a);
    auto ib = member_of.find(b);
    if (ia == member_of.end() || ib == member_of.end()) return false;
    for (std::size_t s : ia->second) {
      if (std::find(ib->second.begin(), ib->second.end(), s) != ib->second.end()) return true;
    }
    return false;
  };

  for (std::size_t pi = 0; pi < p_idx.size(); ++pi) {
    const HolElement& p = elems[p_idx[pi]];
    const u64 p_code = hol.encode(p);
    for (std::size_t qj : partners[pi]) {
      const HolElement& q = elems[q_idx[qj]];
      if (share_subgroup(p_code, hol.encode(q))) continue;
      const HolElement gens[] = {p, q};
      std::vector<HolElement> sub = closure(hol, gens, type.n);
      if (sub.size() != type.n || !is_transitive(hol, sub)) continue;
      std::sort(sub.begin(), sub.end(), [&](const HolElement& x, const HolElement& y) {
        return hol.encode(x) < hol.encode(y);
      });
      std::vector<u64> key;
      key.reserve(sub.size());
      for (const HolElement& x : sub) key.push_back(hol.encode(x));
      if (!keys.insert(key).second) continue;
      const std::size_t id = census.subgroups.size();
      for (u64 code : key) member_of[code].push_back(id);
      census.subgroups.push_back(std::move(sub));
    }
  }
  census.result.count = census.subgroups.size();
  return census;
}

CensusResult regular_subgroup_census(const GroupSpec& galois, const GroupSpec& type,
                                     const OracleConfig& config) {
  return regular_subgroup_census_full(galois, type, config).result;
}

u64 special_generator_pairs(const PairContext& ctx, const Holomorph& hol,
                            const std::vector<HolElement>& subgroup) {
  require_compatible(ctx);
  const u64 d = ctx.type.d;
  const u64 one = 1 % ctx.type.e;
  std::vector<HolElement> xs, ys;
  for (const HolElement& a : subgroup) {
    if (a.f == 0 && a.t == one && hol.is_identity(hol.pow(a, ctx.gamma()))) xs.push_back(a);
    if (a.f == 1 % d && hol.is_identity(hol.pow(a, ctx.zeta() * ctx.delta()))) ys.push_back(a);
  }
  u64 count = 0;
  for (const HolElement& x : xs) {
    std::vector<HolElement> targets;
    for (u64 rep : ctx.orbit_reps) targets.push_back(hol.pow(x, rep));
    for (const HolElement& y : ys) {
      const HolElement conj = hol.mul(hol.mul(y, x), hol.inv(y));
      if (std::find(targets.begin(), targets.end(), conj) == targets.end()) continue;
      const HolElement gens[] = {x, y};
      if (closure(hol, gens, subgroup.size()).size() == subgroup.size()) ++count;
    }
  }
  return count;
}

namespace {

// Closure of <x, y> inside a metacyclic group; returns its size (capped).
u64 generated_order(const MetacyclicGroup& grp, GElement x, GElement y) {
  std::vector<char> seen(grp.order(), 0);
  std::vector<u64> queue{grp.index(grp.identity())};
  seen[queue[0]] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const GElement a = grp.element(queue[head]);
    for (GElement s : {x, y}) {
      const u64 idx = grp.index(grp.mul(a, s));
      if (!seen[idx]) {
        seen[idx] = 1;
        queue.push_back(idx);
      }
    }
  }
  return queue.size();
}

u64 element_order(const MetacyclicGroup& grp, GElement x) {
  u64 ord = 1;
  for (GElement p = x; !(p == grp.identity()); p = grp.mul(p, x)) ++ord;
  return ord;
}

// (order, number of elements of that order), ascending.
std::vector<std::pair<u64, u64>> order_statistics(const std::vector<u64>& orders) {
  std::map<u64, u64> hist;
  for (u64 o : orders) ++hist[o];
  return {hist.begin(), hist.end()};
}

// Is there a surjection G(d, e, k) -> target? With equal orders it is an isomorphism.
bool presentation_maps_onto(u64 d, u64 e, u64 k, const MetacyclicGroup& target,
                            const std::vector<u64>& orders) {
  std::vector<GElement> xs, ys;
  for (u64 i = 0; i < target.order(); ++i) {
    if (orders[i] == e) xs.push_back(target.element(i));
    if (orders[i] == d) ys.push_back(target.element(i));
  }
  for (GElement x : xs) {
    const GElement xk = target.pow(x, k);
    for (GElement y : ys) {
      if (!(target.mul(target.mul(y, x), target.inv(y)) == xk)) continue;
      if (generated_order(target, x, y) == target.order()) return true;
    }
  }
  return false;
}

}  // namespace

CensusResult aut_census(const GroupSpec& g, const OracleConfig& config) {
  require_order_bound(g.n, config);
  const MetacyclicGroup grp(g);
  CensusResult r;
  r.method = CensusMethod::AutCensus;
  r.candidates_examined = g.n * g.n;
  const GElement one = grp.identity();
  u64 count = 0;
  for (u64 xi = 0; xi < g.n; ++xi) {
    const GElement x = grp.element(xi);
    if (!(grp.pow(x, g.e) == one)) continue;
    const GElement xk = grp.pow(x, g.k);
    for (u64 yi = 0; yi < g.n; ++yi) {
      const GElement y = grp.element(yi);
      if (!(grp.pow(y, g.d) == one)) continue;
      if (!(grp.mul(grp.mul(y, x), grp.inv(y)) == xk)) continue;
      if (generated_order(grp, x, y) == g.n) ++count;
    }
  }
  r.count = count;
  return r;
}

CensusResult iso_class_census(u64 n, const OracleConfig& config) {
  require_order_bound(n, config);
  if (!is_squarefree(n)) throw Error(Errc::NotSquarefree, std::to_string(n));

  struct Realized {
    MetacyclicGroup group;
    std::vector<u64> orders;
    std::vector<std::pair<u64, u64>> stats;
  };
  std::vector<Realized> classes;
  CensusResult r;
  r.method = CensusMethod::IsoCensus;

  for (u64 d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const u64 e = n / d;
    if (gcd(d, e) != 1) continue;
    for (u64 k : units_mod(e)) {
      if ((e == 1 ? 1 : mult_order(k, e)) != d) continue;
      ++r.candidates_examined;
      // realize with the raw k, not the canonical one
      GroupSpec raw = make_group(d, e, k);
      raw.k = k;
      Realized cand{MetacyclicGroup(raw), {}, {}};
      cand.orders.resize(n);
      for (u64 i = 0; i < n; ++i) cand.orders[i] = element_order(cand.group, cand.group.element(i));
      cand.stats = order_statistics(cand.orders);
      bool known = false;
      for (const Realized& c : classes) {
        if (c.stats != cand.stats) continue;
        if (presentation_maps_onto(d, e, k, c.group, c.orders)) {
          known = true;
          break;
        }
      }
      if (!known) classes.push_back(std::move(cand));
    }
  }
  r.count = classes.size();
  return r;
}

}  // namespace hgsq

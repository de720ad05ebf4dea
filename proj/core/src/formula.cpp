#include "hgsq/formula.hpp"

#include <algorithm>
#include <string>

#include "hgsq/error.hpp"

namespace hgsq {

namespace {

std::vector<u64> units_of(u64 m) {
  if (m == 1) return {0};
  std::vector<u64> out;
  for (u64 j = 1; j < m; ++j) {
    if (gcd(j, m) == 1) out.push_back(j);
  }
  return out;
}

u64 smallest_lift_coprime(u64 j, u64 m, u64 delta) {
  u64 big = j == 0 ? m : j;
  while (gcd(big, delta) != 1) big += m;
  return big;
}

void check_orders(const GroupSpec& galois, const GroupSpec& type) {
  if (galois.n != type.n) {
    throw Error(Errc::OrderMismatch,
                std::to_string(galois.n) + " != " + std::to_string(type.n));
  }
}

PairContext base_context(const GroupSpec& galois, const GroupSpec& type) {
  check_orders(galois, type);
  PairContext ctx;
  ctx.galois = galois;
  ctx.type = type;
  ctx.galois_params = derived_params(galois);
  ctx.type_params = derived_params(type);
  ctx.orbit_modulus = gcd(galois.d, type.d);
  ctx.orbit_count = euler_phi(ctx.orbit_modulus);
  ctx.compatible = type.e % ctx.gamma() == 0;
  return ctx;
}

void fill_prime_data(PairContext& ctx) {
  if (!ctx.compatible) return;
  const u64 gamma = ctx.gamma();
  const u64 z = ctx.type_params.z;
  PrimeClasses& pc = ctx.primes;
  for (u64 q : ctx.type.e_factors.primes) {
    const bool on_commutator = gamma % q == 0;
    const bool central = z % q == 0;
    if (on_commutator && central) {
      pc.commutator_central.push_back(q);
    } else if (!on_commutator && central) {
      pc.abelian_central.push_back(q);
    } else if (!on_commutator) {
      pc.abelian_commutator.push_back(q);
    } else {
      const u64 rho = ctx.galois_params.local_order.at(q);
      const u64 r = ctx.type_params.local_order.at(q);
      if (rho != r) {
        pc.mismatched.push_back(q);
      } else if (r > 2) {
        pc.matched.push_back(q);
      } else {
        pc.matched_involution.push_back(q);
      }
    }
  }
  const std::size_t w = ctx.orbit_reps.size();
  ctx.matched_plus.assign(w, {});
  ctx.matched_minus.assign(w, {});
  for (std::size_t h = 0; h < w; ++h) {
    for (u64 q : pc.matched) {
      const u64 kq = ctx.type.k % q;
      const u64 rep = ctx.orbit_reps[h] % q;
      if (rep == kq) ctx.matched_plus[h].push_back(q);
      if (mul_mod(rep, kq, q) == 1) ctx.matched_minus[h].push_back(q);
    }
  }
}

BigInt pow2(std::size_t k) { return BigInt(1) << k; }

// prod_{q in T} 1/q * prod_{q in S_h} (q+1)/(2q)
BigRational local_factor(const PairContext& ctx, std::size_t h) {
  BigRational f = 1;
  for (u64 q : ctx.primes.matched_involution) f /= BigRational(q);
  for (u64 q : ctx.matched_at(h)) f *= BigRational(BigInt(q + 1), BigInt(2 * q));
  return f;
}

}  // namespace

std::vector<u64> PairContext::matched_at(std::size_t h) const {
  std::vector<u64> out = matched_plus.at(h);
  out.insert(out.end(), matched_minus.at(h).begin(), matched_minus.at(h).end());
  std::sort(out.begin(), out.end());
  return out;
}

PairContext build_context(const GroupSpec& galois, const GroupSpec& type) {
  PairContext ctx = base_context(galois, type);
  if (!ctx.compatible) return ctx;
  const u64 m = ctx.orbit_modulus;
  const u64 eps = galois.e;
  std::vector<u64> reps;
  for (u64 j : units_of(m)) {
    reps.push_back(mod_pow(galois.k, smallest_lift_coprime(j, m, galois.d), eps));
  }
  if (m > 2) {
    const std::size_t w = reps.size();
    for (std::size_t h = w / 2; h < w; ++h) reps[h] = mod_inv(reps[w - 1 - h], eps);
  }
  ctx.orbit_reps = std::move(reps);
  fill_prime_data(ctx);
  return ctx;
}

PairContext build_context_with_reps(const GroupSpec& galois, const GroupSpec& type,
                                    std::vector<u64> reps) {
  PairContext ctx = base_context(galois, type);
  if (!ctx.compatible) return ctx;
  if (reps.size() != ctx.orbit_count) {
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(ctx.orbit_count) +
                                           " orbit representatives");
  }
  ctx.orbit_reps = std::move(reps);
  fill_prime_data(ctx);
  return ctx;
}

std::vector<u64> delta_subgroup(const PairContext& ctx) {
  const u64 delta = ctx.delta();
  std::vector<u64> out;
  for (u64 m = 1; m <= delta; ++m) {
    if (gcd(m, delta) == 1 && (m - 1) % ctx.orbit_modulus == 0) out.push_back(m % delta);
  }
  return out;
}

std::vector<u64> reselect_in_orbits(const PairContext& ctx, const std::vector<u64>& exponents) {
  if (exponents.size() != ctx.orbit_reps.size()) {
    throw Error(Errc::InvalidArgument, "one exponent per orbit representative");
  }
  std::vector<u64> out;
  for (std::size_t h = 0; h < exponents.size(); ++h) {
    const u64 m = exponents[h];
    if (gcd(m, ctx.delta()) != 1 || (m + ctx.delta() - 1) % ctx.orbit_modulus != 0) {
      throw Error(Errc::InvalidArgument, std::to_string(m) + " is not in Delta");
    }
    out.push_back(mod_pow(ctx.orbit_reps[h], m, ctx.galois.e));
  }
  return out;
}

u64 aut_order(const GroupSpec& g) {
  return derived_params(g).g * euler_phi(g.e_factors);
}

BigInt count_Nh(const PairContext& ctx, std::size_t h) {
  if (!ctx.compatible) throw Error(Errc::Incompatible, "gamma does not divide e");
  if (h >= ctx.orbit_reps.size()) throw Error(Errc::InvalidArgument, "orbit index out of range");
  const auto& tp = ctx.type_params;
  BigRational value = BigRational(euler_phi(ctx.type.e_factors));
  value *= BigRational(pow2(tp.g_factors.omega()) * tp.g * ctx.gamma());
  value *= local_factor(ctx, h);
  return require_integer(value, "|N_h|");
}

BigInt count_family(const PairContext& ctx, std::size_t h) {
  const BigInt nh = count_Nh(ctx, h);
  const BigInt denom = BigInt(ctx.gamma()) * euler_phi(ctx.type.e_factors) * ctx.orbit_count;
  BigRational f(nh * euler_phi(ctx.galois.d_factors), denom);
  return require_integer(f, "|F_h|");
}

BigInt count_regular_subgroups(const PairContext& ctx) {
  if (!ctx.compatible) return 0;
  BigInt total = 0;
  for (std::size_t h = 0; h < ctx.orbit_reps.size(); ++h) total += count_family(ctx, h);
  return total;
}

CountReport count_report(const PairContext& ctx) {
  CountReport rep;
  rep.aut_galois = aut_order(ctx.galois);
  rep.aut_type = aut_order(ctx.type);
  if (!ctx.compatible) {
    rep.status = CountStatus::Incompatible;
    return rep;
  }
  for (std::size_t h = 0; h < ctx.orbit_reps.size(); ++h) {
    rep.nh.push_back(count_Nh(ctx, h));
    rep.family.push_back(count_family(ctx, h));
    rep.regular_subgroups += rep.family.back();
  }

  // closed formula
  const auto& tp = ctx.type_params;
  BigRational sum = 0;
  for (std::size_t h = 0; h < ctx.orbit_reps.size(); ++h) sum += local_factor(ctx, h);
  BigRational closed(pow2(tp.g_factors.omega()) * euler_phi(ctx.type.d_factors) * ctx.gamma(),
                     BigInt(ctx.orbit_count));
  closed *= sum;
  rep.hgs = require_integer(closed, "e(Gamma, G)");

  // |Aut Gamma| / |Aut G| * e'
  const BigRational via_aut(rep.aut_galois * rep.regular_subgroups, rep.aut_type);
  const BigInt second = require_integer(via_aut, "|Aut Gamma| e' / |Aut G|");
  if (second != rep.hgs) {
    throw Error(Errc::RouteMismatch, "closed formula " + rep.hgs.str() + " vs holomorph route " +
                                         second.str());
  }
  return rep;
}

BigInt count_hgs(const PairContext& ctx) { return count_report(ctx).hgs; }

BigInt count_hgs(const GroupSpec& galois, const GroupSpec& type) {
  return count_hgs(build_context(galois, type));
}

BigInt cyclic_source_count(const GroupSpec& type) {
  const DerivedParams p = derived_params(type);
  return pow2(p.g_factors.omega()) * euler_phi(type.d_factors);
}

BigInt cyclic_type_count(const GroupSpec& galois) { return derived_params(galois).g; }

namespace {

void check_odd_squarefree(u64 m) {
  if (m < 3 || m % 2 == 0 || !is_squarefree(m)) {
    throw Error(Errc::NotOddSquarefree, std::to_string(m));
  }
}

}  // namespace

GroupSpec dihedral_group(u64 m) {
  check_odd_squarefree(m);
  return make_group(2, m, m - 1);
}

BigInt dihedral_source_count(u64 m, const GroupSpec& type) {
  check_odd_squarefree(m);
  if (type.n != 2 * m) {
    throw Error(Errc::OrderMismatch, std::to_string(type.n) + " != 2*" + std::to_string(m));
  }
  if (type.d == 1) return m;
  if (type.d != 2) return 0;
  const DerivedParams p = derived_params(type);
  return require_integer(BigRational(pow2(p.g_factors.omega()) * m, BigInt(p.g)),
                         "e(D_2m, G)");
}

BigInt dihedral_type_count(const GroupSpec& galois, u64 m) {
  check_odd_squarefree(m);
  if (galois.n != 2 * m) {
    throw Error(Errc::OrderMismatch, std::to_string(galois.n) + " != 2*" + std::to_string(m));
  }
  const DerivedParams p = derived_params(galois);
  BigRational value(pow2(factor_squarefree(m).omega()) * p.g);
  for (u64 q : p.g_factors.primes) {
    if (p.local_order.at(q) == 2) value /= BigRational(q);
  }
  return require_integer(value, "e(Gamma, D_2m)");
}

}  // namespace hgsq

#include "hgsq/groups.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "hgsq/error.hpp"

namespace hgsq {

std::string GroupSpec::triple() const {
  return std::to_string(d) + "," + std::to_string(e) + "," + std::to_string(k);
}

u64 canonical_generator(u64 k, u64 e, u64 d) {
  if (e == 1) return 0;
  k %= e;
  u64 best = k;
  u64 power = k;
  for (u64 j = 2; j < d; ++j) {
    power = mul_mod(power, k, e);
    if (gcd(j, d) == 1) best = std::min(best, power);
  }
  return best;
}

GroupSpec make_group(u64 d, u64 e, u64 k, u64 factor_bound) {
  if (d == 0 || e == 0) throw Error(Errc::InvalidArgument, "d and e must be positive");
  if (gcd(d, e) != 1) {
    throw Error(Errc::NotCoprime, "gcd(" + std::to_string(d) + ", " + std::to_string(e) + ") != 1");
  }
  if (d > std::numeric_limits<u64>::max() / e) throw Error(Errc::Overflow, "d * e");
  GroupSpec spec;
  spec.n = d * e;
  const Factorization nf = factor_squarefree(spec.n, factor_bound);
  spec.d = d;
  spec.e = e;
  spec.d_factors = restrict_to(nf, d);
  spec.e_factors = restrict_to(nf, e);
  if (e == 1) {
    if (d != 1) throw Error(Errc::InvalidOrder, "ord_1(k) = 1 != " + std::to_string(d));
    spec.k = 0;
    return spec;
  }
  k %= e;
  if (gcd(k, e) != 1) {
    throw Error(Errc::InvalidOrder, std::to_string(k) + " is not a unit mod " + std::to_string(e));
  }
  const u64 order = mult_order(k, spec.e_factors);
  if (order != d) {
    throw Error(Errc::InvalidOrder, "ord_" + std::to_string(e) + "(" + std::to_string(k) +
                                        ") = " + std::to_string(order) + " != " + std::to_string(d));
  }
  spec.k = canonical_generator(k, e, d);
  return spec;
}

DerivedParams derived_params(const GroupSpec& g) {
  DerivedParams p;
  if (g.e == 1) return p;
  p.z = gcd(g.k == 0 ? g.e : g.k - 1, g.e);
  p.g = g.e / p.z;
  p.z_factors = restrict_to(g.e_factors, p.z);
  p.g_factors = restrict_to(g.e_factors, p.g);
  for (u64 q : g.e_factors.primes) p.local_order[q] = mult_order(g.k % q, q);
  return p;
}

bool is_isomorphic(const GroupSpec& a, const GroupSpec& b) noexcept {
  // Both k are canonical, so equal subgroups <=> equal k.
  return a.d == b.d && a.e == b.e && a.k == b.k;
}

namespace {

// Walks every (d, r_q tuple) pair admissible for order n and hands each one to
// `visit`. r_q ranges over divisors of gcd(d, q - 1) and lcm(r_q) must be d.
void for_each_local_order_tuple(
    const Factorization& nf,
    const std::function<void(u64 d, const Factorization& df, const Factorization& ef,
                             const std::vector<u64>& orders)>& visit) {
  for (u64 d : divisors(nf)) {
    const Factorization df = restrict_to(nf, d);
    const Factorization ef = restrict_to(nf, nf.n / d);
    std::vector<std::vector<u64>> choices;
    for (u64 q : ef.primes) {
      choices.push_back(divisors(restrict_to(df, q - 1)));
    }
    std::vector<u64> orders(ef.primes.size(), 1);
    std::function<void(std::size_t, u64)> rec = [&](std::size_t pos, u64 running_lcm) {
      if (pos == orders.size()) {
        if (running_lcm == d) visit(d, df, ef, orders);
        return;
      }
      for (u64 r : choices[pos]) {
        orders[pos] = r;
        rec(pos + 1, lcm(running_lcm, r));
      }
    };
    rec(0, 1);
  }
}

}  // namespace

std::vector<GroupSpec> enumerate_groups(u64 n, u64 factor_bound) {
  const Factorization nf = factor_squarefree(n, factor_bound);
  std::vector<GroupSpec> out;
  std::map<u64, u64> roots;
  for (u64 q : nf.primes) roots[q] = primitive_root(q);

  for_each_local_order_tuple(nf, [&](u64 d, const Factorization& df, const Factorization& ef,
                                     const std::vector<u64>& orders) {
    const u64 e = ef.n;
    if (e == 1) {
      out.push_back(make_group(1, 1, 0, factor_bound));
      return;
    }
    // A cyclic subgroup of order d in prod_q C_{r_q} is generated by a tuple
    // of discrete logs x_q in Z_{r_q}^x, determined up to a common unit
    // multiplier in Z_d^x. Splitting by primes p | d, the multiplier acts on
    // the mod-p components, so we pin the first q carrying p to 1.
    struct Slot {
      std::size_t q_index;
      u64 p;
    };
    std::vector<Slot> slots;
    std::vector<bool> pinned;
    for (u64 p : df.primes) {
      bool first = true;
      for (std::size_t qi = 0; qi < orders.size(); ++qi) {
        if (orders[qi] % p != 0) continue;
        slots.push_back({qi, p});
        pinned.push_back(first);
        first = false;
      }
    }
    std::vector<u64> comp(slots.size(), 1);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos < slots.size()) {
        if (pinned[pos]) {
          comp[pos] = 1;
          rec(pos + 1);
        } else {
          for (u64 c = 1; c < slots[pos].p; ++c) {
            comp[pos] = c;
            rec(pos + 1);
          }
        }
        return;
      }
      std::vector<Congruence> k_parts;
      for (std::size_t qi = 0; qi < orders.size(); ++qi) {
        const u64 q = ef.primes[qi];
        std::vector<Congruence> log_parts;
        for (std::size_t s = 0; s < slots.size(); ++s) {
          if (slots[s].q_index == qi) log_parts.push_back({comp[s], slots[s].p});
        }
        const u64 x = crt_combine(log_parts).residue;  // discrete log mod r_q
        const u64 base = mod_pow(roots[q], (q - 1) / orders[qi], q);
        k_parts.push_back({mod_pow(base, x, q), q});
      }
      const u64 k = crt_combine(k_parts).residue;
      GroupSpec spec;
      spec.n = nf.n;
      spec.d = d;
      spec.e = e;
      spec.k = canonical_generator(k, e, d);
      spec.d_factors = df;
      spec.e_factors = ef;
      out.push_back(std::move(spec));
    };
    rec(0);
  });

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

u64 count_groups(u64 n, u64 factor_bound) {
  const Factorization nf = factor_squarefree(n, factor_bound);
  u64 total = 0;
  for_each_local_order_tuple(nf, [&](u64 d, const Factorization& df, const Factorization&,
                                     const std::vector<u64>& orders) {
    u64 num = 1;
    for (u64 r : orders) num *= euler_phi(r);
    total += num / euler_phi(df);
    (void)d;
  });
  return total;
}

GElement g_mul(const GroupSpec& g, GElement x, GElement y) noexcept {
  if (g.e == 1) return {0, (x.j + y.j) % g.d};
  const u64 twist = mul_mod(mod_pow(g.k, x.j, g.e), y.i, g.e);
  return {add_mod(x.i, twist, g.e), (x.j + y.j) % g.d};
}

std::pair<u64, u64> center_and_commutator_orders(const GroupSpec& g) {
  const DerivedParams p = derived_params(g);
  return {p.z, p.g};
}

MetacyclicGroup::MetacyclicGroup(const GroupSpec& spec) : spec_(spec) {
  k_pows_.resize(spec_.d);
  k_geoms_.resize(spec_.d);
  u64 power = 1 % spec_.e;
  u64 geom = 0;
  for (u64 j = 0; j < spec_.d; ++j) {
    k_pows_[j] = power;
    k_geoms_[j] = geom;
    geom = add_mod(geom, power, spec_.e);
    power = mul_mod(power, spec_.k, spec_.e);
  }
}

GElement MetacyclicGroup::mul(GElement x, GElement y) const noexcept {
  const u64 e = spec_.e;
  u64 j = x.j + y.j;
  if (j >= spec_.d) j -= spec_.d;
  return {add_mod(x.i, mul_mod(k_pows_[x.j], y.i, e), e), j};
}

GElement MetacyclicGroup::inv(GElement x) const noexcept {
  const u64 e = spec_.e;
  const u64 j = x.j == 0 ? 0 : spec_.d - x.j;
  // (sigma^i tau^j)^-1 = tau^-j sigma^-i = sigma^(-k^-j i) tau^-j
  return {mul_mod(k_pows_[j], (e - x.i) % e, e), j};
}

GElement MetacyclicGroup::pow(GElement x, u64 j) const noexcept {
  GElement result = identity();
  while (j > 0) {
    if (j & 1U) result = mul(result, x);
    x = mul(x, x);
    j >>= 1U;
  }
  return result;
}

}  // namespace hgsq

#include "hgsq/holomorph.hpp"

#include "hgsq/error.hpp"

namespace hgsq {

Holomorph::Holomorph(const GroupSpec& spec) : group_(spec) {
  const DerivedParams p = derived_params(spec);
  z_ = p.z;
  g_ = p.g;
}

u64 Holomorph::size() const noexcept {
  return spec().n * g_ * euler_phi(spec().e_factors);
}

HolElement Holomorph::identity() const noexcept { return {0, 0, 0, 1 % spec().e}; }

GElement Holomorph::aut_apply(u64 v, u64 t, GElement x) const noexcept {
  const u64 e = spec().e;
  // v z is well defined mod e because z g = e.
  const u64 shift = mul_mod(mul_mod(v, z_, e), group_.k_geom(x.j), e);
  return {add_mod(mul_mod(t, x.i, e), shift, e), x.j};
}

HolElement Holomorph::mul(const HolElement& a, const HolElement& b) const noexcept {
  const u64 e = spec().e;
  const GElement x = group_.mul(a.translation(), aut_apply(a.v, a.t, b.translation()));
  const u64 v = add_mod(a.v, mul_mod(a.t % g_, b.v, g_), g_);
  return {x.i, x.j, v, mul_mod(a.t, b.t, e)};
}

HolElement Holomorph::inv(const HolElement& a) const noexcept {
  const u64 e = spec().e;
  const u64 t_inv = e == 1 ? 0 : mod_inv(a.t, e);
  // (theta^v phi_t)^-1 = theta^(-t^-1 v) phi_(t^-1)
  const u64 v_inv = mul_mod(t_inv % g_, (g_ - a.v) % g_, g_);
  const GElement x = aut_apply(v_inv, t_inv, group_.inv(a.translation()));
  return {x.i, x.j, v_inv, t_inv};
}

HolElement Holomorph::pow(HolElement a, u64 j) const noexcept {
  HolElement result = identity();
  while (j > 0) {
    if (j & 1U) result = mul(result, a);
    a = mul(a, a);
    j >>= 1U;
  }
  return result;
}

GElement Holomorph::act(const HolElement& a, GElement y) const noexcept {
  return group_.mul(a.translation(), aut_apply(a.v, a.t, y));
}

u64 Holomorph::element_order(const HolElement& a) const noexcept {
  u64 order = 1;
  HolElement power = a;
  const HolElement one = identity();
  while (!(power == one)) {
    power = mul(power, a);
    ++order;
  }
  return order;
}

u64 Holomorph::encode(const HolElement& a) const noexcept {
  return ((a.u * spec().d + a.f) * g_ + a.v) * spec().e + a.t;
}

u64 Holomorph::code_space() const noexcept { return spec().n * g_ * spec().e; }

std::vector<HolElement> Holomorph::elements() const {
  const u64 e = spec().e;
  const u64 d = spec().d;
  std::vector<HolElement> out;
  out.reserve(size());
  for (u64 u = 0; u < e; ++u) {
    for (u64 f = 0; f < d; ++f) {
      for (u64 v = 0; v < g_; ++v) {
        for (u64 t = 0; t < e; ++t) {
          if (gcd(t, e) == 1) out.push_back({u, f, v, t % e});
        }
      }
    }
  }
  return out;
}

namespace {

YPower y_power_from(const GroupSpec& g, u64 z, u64 gg, u64 u, u64 t, u64 v, u64 j) {
  const u64 e = g.e;
  YPower out;
  const u64 tk = mul_mod(t, g.k, e);
  const u64 first = mul_mod(u % e, sum_S(tk, j, e), e);
  const u64 coeff = mul_mod(mul_mod(v % e, z % e, e), g.k, e);
  const u64 second = mul_mod(coeff, sum_T_direct(g.k, t, j, e), e);
  out.sigma_exp = add_mod(first, second, e);
  out.tau_exp = j % g.d;
  out.theta_exp = mul_mod(v % gg, sum_S(t, j, gg), gg);
  out.phi = mod_pow(t, j, e);
  return out;
}

}  // namespace

YPower Holomorph::y_power_closed(u64 u, u64 t, u64 v, u64 j) const {
  return y_power_from(spec(), z_, g_, u, t, v, j);
}

GElement aut_apply(const Holomorph& hol, u64 v, u64 t, GElement x) noexcept {
  return hol.aut_apply(v, t, x);
}
HolElement hol_mul(const Holomorph& hol, const HolElement& a, const HolElement& b) noexcept {
  return hol.mul(a, b);
}
GElement hol_act(const Holomorph& hol, const HolElement& a, GElement y) noexcept {
  return hol.act(a, y);
}
HolElement hol_pow(const Holomorph& hol, const HolElement& a, u64 j) noexcept {
  return hol.pow(a, j);
}

u64 sum_S(u64 m, u64 j, u64 modulus) noexcept {
  if (modulus == 1) return 0;
  // Binary splitting: S(m, 2h) = S(m, h)(1 + m^h), S(m, h + 1) = 1 + m S(m, h).
  m %= modulus;
  u64 sum = 0;
  u64 power = 1;  // m^(processed length)
  for (int bit = 63; bit >= 0; --bit) {
    sum = mul_mod(sum, add_mod(1, power, modulus), modulus);
    power = mul_mod(power, power, modulus);
    if ((j >> bit) & 1U) {
      sum = add_mod(1, mul_mod(m, sum, modulus), modulus);
      power = mul_mod(power, m, modulus);
    }
  }
  return sum;
}

u64 sum_T_direct(u64 k, u64 t, u64 j, u64 modulus) noexcept {
  if (modulus == 1 || j == 0) return 0;
  k %= modulus;
  t %= modulus;
  u64 total = 0;
  u64 s = 1;      // S(t, h) for h = 1
  u64 kpow = 1;   // k^(h-1)
  u64 tpow = t;   // t^h
  for (u64 h = 1; h < j; ++h) {
    total = add_mod(total, mul_mod(s, kpow, modulus), modulus);
    s = add_mod(s, tpow, modulus);
    tpow = mul_mod(tpow, t, modulus);
    kpow = mul_mod(kpow, k, modulus);
  }
  return total;
}

u64 sum_S_closed(u64 s, u64 j, u64 q) {
  s %= q;
  if (s == 1) return j % q;
  const u64 num = sub_mod(mod_pow(s, j, q), 1, q);
  return mul_mod(num, mod_inv(sub_mod(s, 1, q), q), q);
}

u64 sum_T_closed(u64 k, u64 t, u64 j, u64 q) {
  k %= q;
  t %= q;
  if (k == 1 % q) throw Error(Errc::InvalidArgument, "T closed form needs k != 1 mod q");
  if (mod_pow(k, j, q) != 1 % q) {
    throw Error(Errc::InvalidArgument, "T closed form needs k^j == 1 mod q");
  }
  const u64 k_inv = mod_inv(k, q);
  if (t == 1 % q) {
    return mul_mod(j % q, mod_inv(mul_mod(k, sub_mod(k, 1, q), q), q), q);
  }
  if (mul_mod(t, k, q) == 1 % q) {
    return mul_mod(j % q, mod_inv(mul_mod(k, sub_mod(t, 1, q), q), q), q);
  }
  const u64 num = sub_mod(mod_pow(t, j, q), 1, q);
  const u64 den = mul_mod(sub_mod(t, 1, q), sub_mod(mul_mod(t, k, q), 1, q), q);
  return mul_mod(mul_mod(num, k_inv, q), mod_inv(den, q), q);
}

u64 sum_T(u64 k, u64 t, u64 j, u64 modulus) {
  if (modulus > 2 && is_prime(modulus) && k % modulus != 0 && k % modulus != 1 &&
      t % modulus != 0 && mod_pow(k, j, modulus) == 1) {
    return sum_T_closed(k, t, j, modulus);
  }
  return sum_T_direct(k, t, j, modulus);
}

YPower y_power_closed(const GroupSpec& g, u64 u, u64 t, u64 v, u64 j) {
  const DerivedParams p = derived_params(g);
  return y_power_from(g, p.z, p.g, u, t, v, j);
}

}  // namespace hgsq

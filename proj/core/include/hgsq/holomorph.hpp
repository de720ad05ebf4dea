#pragma once

// Arithmetic in Hol(G) = G x| Aut(G) for G = G(d, e, k) of squarefree order.
//
// Aut(G) is generated by theta (sigma -> sigma, tau -> sigma^z tau) and
// phi_s (sigma -> sigma^s, tau -> tau) for s in Z_e^x, subject to
// theta^g = 1, phi_s phi_t = phi_st and phi_s theta phi_s^-1 = theta^s.
// Every element of Hol(G) is written uniquely as [sigma^u tau^f, theta^v phi_t].

#include <cstdint>
#include <vector>

#include "hgsq/groups.hpp"
#include "hgsq/modarith.hpp"

namespace hgsq {

struct HolElement {
  u64 u = 0;  // mod e
  u64 f = 0;  // mod d
  u64 v = 0;  // mod g
  u64 t = 1;  // unit mod e (0 when e == 1)

  GElement translation() const noexcept { return {u, f}; }

  friend bool operator==(const HolElement&, const HolElement&) = default;
};

/// Components of Y^j for Y = [sigma^u tau, theta^v phi_t].
struct YPower {
  u64 sigma_exp = 0;  // A(j) mod e
  u64 tau_exp = 0;    // j mod d
  u64 theta_exp = 0;  // v S(t, j) mod g
  u64 phi = 1;        // t^j mod e
};

class Holomorph {
 public:
  explicit Holomorph(const GroupSpec& spec);

  const MetacyclicGroup& group() const noexcept { return group_; }
  const GroupSpec& spec() const noexcept { return group_.spec(); }
  u64 z() const noexcept { return z_; }
  u64 g() const noexcept { return g_; }

  /// n * g * phi(e).
  u64 size() const noexcept;

  HolElement identity() const noexcept;
  bool is_identity(const HolElement& a) const noexcept { return a == identity(); }

  /// theta^v phi_t applied to sigma^i tau^j:  sigma^(t i + v z S(k, j)) tau^j.
  GElement aut_apply(u64 v, u64 t, GElement x) const noexcept;

  /// [x, a][x', a'] = [x a(x'), a a'] with (v, t)(v', t') = (v + t v', t t').
  HolElement mul(const HolElement& a, const HolElement& b) const noexcept;
  HolElement inv(const HolElement& a) const noexcept;
  HolElement pow(HolElement a, u64 j) const noexcept;

  /// [x, a] . y = x a(y).
  GElement act(const HolElement& a, GElement y) const noexcept;

  /// Least j >= 1 with a^j = 1.
  u64 element_order(const HolElement& a) const noexcept;

  /// Dense code in [0, n * g * e), injective on valid elements.
  u64 encode(const HolElement& a) const noexcept;
  u64 code_space() const noexcept;

  /// Every element, in encode() order. Only sensible for small n.
  std::vector<HolElement> elements() const;

  /// Closed form of Y^j, Y = [sigma^u tau, theta^v phi_t].
  YPower y_power_closed(u64 u, u64 t, u64 v, u64 j) const;

 private:
  MetacyclicGroup group_;
  u64 z_ = 1;
  u64 g_ = 1;
};

/// Convenience wrappers mirroring the member functions.
GElement aut_apply(const Holomorph& hol, u64 v, u64 t, GElement x) noexcept;
HolElement hol_mul(const Holomorph& hol, const HolElement& a, const HolElement& b) noexcept;
GElement hol_act(const Holomorph& hol, const HolElement& a, GElement y) noexcept;
HolElement hol_pow(const Holomorph& hol, const HolElement& a, u64 j) noexcept;

/// S(m, j) = sum_{i<j} m^i mod `modulus`, exact for every modulus.
u64 sum_S(u64 m, u64 j, u64 modulus) noexcept;

/// T(k, t, j) = sum_{h=1}^{j-1} S(t, h) k^(h-1) mod `modulus` (the h = 0 term
/// vanishes because S(t, 0) = 0). Uses the closed form at a prime modulus
/// whenever it applies, direct summation otherwise.
u64 sum_T(u64 k, u64 t, u64 j, u64 modulus);

/// Direct summation of T.
u64 sum_T_direct(u64 k, u64 t, u64 j, u64 modulus) noexcept;

/// Closed forms at a prime q:
///   S(s, j) = j                      if s == 1
///           = (s^j - 1) / (s - 1)    otherwise
/// and, when k != 1 and k^j == 1 (mod q),
///   T(k, t, j) = j / (k (k - 1))                       if t == 1
///              = j / (k (t - 1))                       if t k == 1
///              = (t^j - 1) / (k (t - 1) (t k - 1))      otherwise.
u64 sum_S_closed(u64 s, u64 j, u64 q);
/// Throws InvalidArgument when k == 1 or k^j != 1 (mod q).
u64 sum_T_closed(u64 k, u64 t, u64 j, u64 q);

/// Y^j via the closed form, free-function form.
YPower y_power_closed(const GroupSpec& g, u64 u, u64 t, u64 v, u64 j);

}  // namespace hgsq

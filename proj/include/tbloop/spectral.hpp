// Spectral-parameter weights: the bracket [z] = z - 1/z, the boundary weight
// k(z, zeta, omega) = [z e^{i omega/2}/zeta][z e^{i omega/2} zeta] and its
// combinatorial-point form k(z, zeta) = [z/(q zeta)][z zeta/q], and the
// normalisation kappa(z) built from truncated q-Pochhammer products.

#pragma once

#include <complex>

#include "tbloop/cyclo.hpp"
#include "tbloop/laurent.hpp"

namespace tbloop {

template <class S>
S bracket(const S& z) {
  return z - S(1) / z;
}

// General-parameter boundary weight; eihw = e^{i omega/2}.
template <class S>
S k_general(const S& z, const S& zeta, const S& eihw) {
  return bracket(z * eihw / zeta) * bracket(z * eihw * zeta);
}

// Combinatorial point: omega = -2 gamma, so e^{i omega/2} = q^{-1}.
template <class S>
S k_spec(const S& z, const S& zeta, const S& q) {
  return bracket(z / (q * zeta)) * bracket(z * zeta / q);
}

inline Cyclo k_spec(const Cyclo& z, const Cyclo& zeta) {
  return k_spec(z, zeta, Cyclo::q());
}
inline std::complex<double> k_spec_c(const std::complex<double>& z,
                                     const std::complex<double>& zeta) {
  static const std::complex<double> q = Cyclo::q().to_complex();
  return k_spec(z, zeta, q);
}

// Polynomial versions in named variables (combinatorial point).
inline Poly bracket_monomials(const Poly& u, const Poly& u_inv) { return u - u_inv; }

// [c * za^ea * zb^eb] with monomial arguments; c must be invertible.
inline Poly bracket_mono(const Cyclo& c, VarId za, int ea, VarId zb = -1, int eb = 0) {
  Monomial m = Monomial::single(za, ea);
  if (zb >= 0 && eb != 0) m = m * Monomial::single(zb, eb);
  return Poly::monomial(m, c) - Poly::monomial(m.inverse(), c.inverse());
}

// k(z_a, z_b) = [z_a/(q z_b)][z_a z_b/q] as a Laurent polynomial.
inline Poly k_poly(VarId za, VarId zb) {
  return bracket_mono(Cyclo::q_inv(), za, 1, zb, -1) * bracket_mono(Cyclo::q_inv(), za, 1, zb, 1);
}
// k with the first argument inverted and both scaled by s: k(1/(s z_a), s z_b).
inline Poly k_poly_inv_scaled(VarId za, VarId zb, const Cyclo& s) {
  Cyclo c1 = (s * s * Cyclo::q()).inverse();  // coefficient of z_a^{-1} z_b^{-1}
  Cyclo c2 = Cyclo::q_inv();                  // coefficient of z_a^{-1} z_b
  return bracket_mono(c1, za, -1, zb, -1) * bracket_mono(c2, za, -1, zb, 1);
}

// Truncated q-Pochhammer normalisation kappa(z); exact identity kappa == 1 at
// the combinatorial point q^3 = 1 (the infinite products are non-analytic on
// |q| = 1 and are only used for generic |q| != 1 numerics).
inline std::complex<double> kappa(const std::complex<double>& z, const std::complex<double>& q,
                                  int truncation_order = 40) {
  auto poch = [&](std::complex<double> a, std::complex<double> b) {
    std::complex<double> r = 1.0, f = a;
    for (int n = 0; n < truncation_order; ++n) {
      r *= (1.0 - f);
      f *= b;
    }
    return r;
  };
  std::complex<double> q2 = q * q, q4 = q2 * q2, q6 = q4 * q2, z2 = z * z;
  if (std::abs(q) < 1.0)
    return z * poch(q6 * z2, q4) * poch(q4 / z2, q4) / (poch(q6 / z2, q4) * poch(q4 * z2, q4));
  std::complex<double> qi2 = 1.0 / q2, qi4 = qi2 * qi2, qi6 = qi4 * qi2;
  return poch(qi6 / z2, qi4) * poch(qi4 * z2, qi4) / (z * poch(qi6 * z2, qi4) * poch(qi4 / z2, qi4));
}

}  // namespace tbloop

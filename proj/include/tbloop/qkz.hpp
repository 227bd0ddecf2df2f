// Functional operators of the exchange-equation system: the argument
// permutations pi_i, the inversion pi_0, the s-twisted inversion pi_L, and the
// divided-difference-style operators a_i, s_i acting on rational functions of
// z_1..z_L, zeta_0, zeta_L. Conventions (combinatorial point):
//   a_i = (pi_i + 1) g_i,   s_i = -1 - a_i,   a_i s_i = s_i a_i = 0.

#pragma once

#include <vector>

#include "tbloop/errors.hpp"
#include "tbloop/ratfn.hpp"
#include "tbloop/spectral.hpp"

namespace tbloop::gs {

struct QkzContext {
  int L = 0;
  Cyclo s = Cyclo::one();  // s^4 = 1
  std::vector<VarId> z;    // z[0] unused; z[1..L]
  VarId zeta0, zetaL;

  static QkzContext make(int L, const Cyclo& s = Cyclo::one()) {
    QkzContext c;
    c.L = L;
    c.s = s;
    c.z.resize(static_cast<size_t>(L) + 1);
    for (int i = 1; i <= L; ++i) c.z[static_cast<size_t>(i)] = var("z" + std::to_string(i));
    c.zeta0 = var("zeta0");
    c.zetaL = var("zetaL");
    return c;
  }
};

// ---- argument maps -------------------------------------------------------

inline Poly swap_vars(const Poly& f, VarId a, VarId b) {
  VarId tmp = var("_swap_tmp");
  return f.substitute_monomial(a, Cyclo::one(), tmp, 1)
      .substitute_monomial(b, Cyclo::one(), a, 1)
      .substitute_monomial(tmp, Cyclo::one(), b, 1);
}
inline RationalFn swap_vars(const RationalFn& f, VarId a, VarId b) {
  return RationalFn(swap_vars(f.num, a, b), swap_vars(f.den, a, b));
}

inline RationalFn pi_i(const QkzContext& c, int i, const RationalFn& f) {
  return swap_vars(f, c.z[static_cast<size_t>(i)], c.z[static_cast<size_t>(i) + 1]);
}
inline RationalFn pi_0(const QkzContext& c, const RationalFn& f) {
  return f.substitute_monomial(c.z[1], Cyclo::one(), c.z[1], -1);
}
inline RationalFn pi_L(const QkzContext& c, const RationalFn& f) {
  // z_L -> 1/(s^2 z_L)
  Cyclo s2i = (c.s * c.s).inverse();
  return f.substitute_monomial(c.z[static_cast<size_t>(c.L)], s2i,
                               c.z[static_cast<size_t>(c.L)], -1);
}

// ---- coefficient functions -----------------------------------------------

// [c za^ea zb^eb] as a rational function
inline RationalFn br(const Cyclo& c, VarId za, int ea, VarId zb = -1, int eb = 0) {
  return RationalFn(bracket_mono(c, za, ea, zb, eb));
}

// k(z_a, z_b) = [z_a/(q z_b)][z_a z_b / q]
inline RationalFn k_rf(VarId za, VarId zb) { return RationalFn(k_poly(za, zb)); }

// the scalar [q] = q - 1/q
inline Cyclo bracket_q() { return bracket(Cyclo::q()); }

// ---- the exchange operators ----------------------------------------------

inline RationalFn a_op(const QkzContext& c, int i, const RationalFn& f) {
  const Cyclo q = Cyclo::q();
  if (i >= 1 && i <= c.L - 1) {
    VarId zi = c.z[static_cast<size_t>(i)], zj = c.z[static_cast<size_t>(i) + 1];
    RationalFn g = br(q.inverse(), zi, 1, zj, -1) / br(Cyclo::one(), zi, 1, zj, -1);
    RationalFn gf = g * f;
    return pi_i(c, i, gf) + gf;
  }
  if (i == 0) {
    // g0 = k(1/z_1, zeta_0) / ([q] [z_1^2])
    RationalFn k0{bracket_mono(q.inverse(), c.z[1], -1, c.zeta0, -1) *
                  bracket_mono(q.inverse(), c.z[1], -1, c.zeta0, 1)};
    RationalFn g = k0 / (RationalFn(Cyclo(bracket_q())) * br(Cyclo::one(), c.z[1], 2));
    RationalFn gf = g * f;
    return pi_0(c, gf) + gf;
  }
  if (i == c.L) {
    // gL = k(s z_L, s zeta_L) / ([q] [s^2 z_L^2])
    VarId zl = c.z[static_cast<size_t>(c.L)];
    Cyclo s2 = c.s * c.s;
    RationalFn kL{bracket_mono(q.inverse(), zl, 1, c.zetaL, -1) *
                  bracket_mono(s2 / q, zl, 1, c.zetaL, 1)};
    RationalFn g = kL / (RationalFn(Cyclo(bracket_q())) * RationalFn(bracket_mono(s2, zl, 2)));
    RationalFn gf = g * f;
    return RationalFn::zero() - (pi_L(c, gf) + gf);
  }
  throw IndexOutOfRange("a_op: index");
}

inline RationalFn s_op(const QkzContext& c, int i, const RationalFn& f) {
  const Cyclo q = Cyclo::q();
  if (i >= 1 && i <= c.L - 1) {
    VarId zi = c.z[static_cast<size_t>(i)], zj = c.z[static_cast<size_t>(i) + 1];
    RationalFn g = br(q, zi, 1, zj, -1) / br(Cyclo::one(), zi, 1, zj, -1);
    return g * (f - pi_i(c, i, f));
  }
  if (i == 0) {
    RationalFn k0{k_poly(c.z[1], c.zeta0)};
    RationalFn g = k0 / (RationalFn(Cyclo(bracket_q())) * br(Cyclo::one(), c.z[1], 2));
    return g * (pi_0(c, f) - f);
  }
  if (i == c.L) {
    VarId zl = c.z[static_cast<size_t>(c.L)];
    Cyclo s2 = c.s * c.s;
    RationalFn kL{bracket_mono((s2 * q).inverse(), zl, -1, c.zetaL, -1) *
                  bracket_mono(q.inverse(), zl, -1, c.zetaL, 1)};
    RationalFn g = kL / (RationalFn(Cyclo(bracket_q())) * RationalFn(bracket_mono(s2, zl, 2)));
    return g * (f - pi_L(c, f));
  }
  throw IndexOutOfRange("s_op: index");
}

}  // namespace tbloop::gs

// Identity and recursion batteries for the Baxterised elements and the
// double-row transfer matrix, plus the Hamiltonian in both its closed form and
// its logarithmic-derivative construction.

#pragma once

#include <complex>

#include "tbloop/diffop.hpp"
#include "tbloop/report.hpp"
#include "tbloop/rng.hpp"
#include "tbloop/transfer.hpp"

namespace tbloop::lattice {

using C = std::complex<double>;

// ---------------------------------------------------------------------------
// embedding maps

template <class S>
Matrix<S> phi_insert_matrix(int i, int L_small) {
  int L = L_small + 2;
  Matrix<S> m(1 << L, 1 << L_small);
  for (unsigned a = 0; a < (1u << L_small); ++a) {
    auto big = tl::insert_small_link(tl::LinkPattern(L_small, a), i);
    m(static_cast<int>(big.index()), static_cast<int>(a)) = S(1);
  }
  return m;
}
template <class S>
Matrix<S> phi_left_matrix(int L_small) {
  Matrix<S> m(1 << (L_small + 1), 1 << L_small);
  for (unsigned a = 0; a < (1u << L_small); ++a) {
    auto big = tl::insert_left_close(tl::LinkPattern(L_small, a));
    m(static_cast<int>(big.index()), static_cast<int>(a)) = S(1);
  }
  return m;
}
template <class S>
Matrix<S> phi_right_matrix(int L_small) {
  Matrix<S> m(1 << (L_small + 1), 1 << L_small);
  for (unsigned a = 0; a < (1u << L_small); ++a) {
    auto big = tl::insert_right_open(tl::LinkPattern(L_small, a));
    m(static_cast<int>(big.index()), static_cast<int>(a)) = S(1);
  }
  return m;
}

// ---------------------------------------------------------------------------
// numeric parameter draws

struct GenericDraw {
  C q, gamma, omega0, omegaL, b;
  tl::AlgebraParams<C> params;
  FacePhases<C> phases;
};

inline GenericDraw draw_generic(Rng& rng, bool unit_q = true) {
  GenericDraw d;
  // gamma with a nonzero imaginary part keeps |q| off 1 when requested
  double re = rng.uniform(0.4, 2.6), im = unit_q ? 0.0 : rng.uniform(0.1, 0.35);
  d.gamma = C(re, im);
  d.omega0 = C(rng.uniform(-2.8, 2.8), rng.uniform(-0.3, 0.3));
  d.omegaL = C(rng.uniform(-2.8, 2.8), rng.uniform(-0.3, 0.3));
  d.b = C(rng.uniform(0.3, 2.2), rng.uniform(-0.5, 0.5));
  const C I(0, 1);
  d.q = std::exp(I * d.gamma);
  d.params = tl::params_from_angles(d.gamma, d.omega0, d.omegaL, d.b);
  d.phases = phases_from_angles(d.gamma, d.omega0, d.omegaL);
  return d;
}

inline TransferPoint<C> draw_point(Rng& rng, int L) {
  TransferPoint<C> pt;
  pt.w = rng.unit_point();
  for (int i = 0; i < L; ++i) pt.zs.push_back(rng.unit_point());
  pt.zeta0 = rng.unit_point();
  pt.zetaL = rng.unit_point();
  return pt;
}

inline TransferPoint<Cyclo> draw_exact_point(Rng& rng, int L) {
  TransferPoint<Cyclo> pt;
  pt.w = rng.exact_point();
  for (int i = 0; i < L; ++i) pt.zs.push_back(rng.exact_point());
  pt.zeta0 = rng.exact_point();
  pt.zetaL = rng.exact_point();
  return pt;
}

// ---------------------------------------------------------------------------
// Yang-Baxter / reflection / unitarity / crossing / interlacing battery

Report identity_battery(int L, int n_points, uint64_t seed, bool generic_q = true);
Report identity_battery_exact(int L, uint64_t seed);

// bulk and boundary recursions of the transfer matrix
Report transfer_recursions(int L, uint64_t seed);

// ---------------------------------------------------------------------------
// Hamiltonian

// H = c_0 (1 - e_0) + c_L (1 - e_L) + sum_j (1 - e_j), c_i = 3/(1 + zeta_i^2
// + zeta_i^{-2}), acting on LP_L at the combinatorial point.
template <class S>
Matrix<S> hamiltonian(int L, const S& zeta0, const S& zetaL, const tl::AlgebraParams<S>& params) {
  auto czeta = [](const S& z) -> S {
    S d = S(1) + z * z + S(1) / (z * z);
    if (d == S(0)) throw SingularBoundaryWeight("hamiltonian: 1 + zeta^2 + zeta^-2 = 0");
    return S(3) / d;
  };
  int dim = 1 << L;
  Matrix<S> H(dim, dim);
  auto add = [&](const S& c, int k) {
    H = H + c * (Matrix<S>::identity(dim) - tl::generator_matrix(k, L, params));
  };
  add(czeta(zeta0), 0);
  add(czeta(zetaL), L);
  for (int j = 1; j <= L - 1; ++j) add(S(1), j);
  return H;
}

// The same operator from the w-derivative of the Baxterised coefficient
// functions at w = 1, with the additive constant fixed by the scalar quotient
// e_i -> 1. Exact arithmetic throughout.
Matrix<Cyclo> hamiltonian_from_logderiv(int L, const Cyclo& zeta0, const Cyclo& zetaL);

// Numeric general-parameter check of the closed form against a finite
// difference of the transfer-matrix building blocks, modulo the identity.
Report hamiltonian_battery(int L, uint64_t seed);

// Perron-Frobenius / stochasticity / adjoint checks
Report transfer_structure_checks(int L, uint64_t seed);

}  // namespace tbloop::lattice

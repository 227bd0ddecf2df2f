// Ground state of the transfer matrix at the combinatorial point: closed-form
// extremal components and normalisation (products of symplectic characters),
// exact and numeric solvers anchored on those closed forms, the exchange
// equation batteries, and the component recursions between system sizes.

#pragma once

#include <complex>

#include "tbloop/qkz.hpp"
#include "tbloop/report.hpp"
#include "tbloop/sympchar.hpp"
#include "tbloop/transfer.hpp"

namespace tbloop::gs {

using lattice::TransferPoint;
using CNum = std::complex<double>;

// ---- closed forms ----------------------------------------------------------

// f_L = (-1)^{L(L+1)/2} tau_{L+1}(z_1..z_L, zeta_L) tau_L(z_1..z_L)
Poly f_symmetric(const QkzContext& c);
// ~f_L(s z_1,..,s z_L) as a polynomial in the z's
Poly f_tilde_symmetric(const QkzContext& c);

// psi for the all-openings pattern: prod_{0<=i<j<=L} k(z_j, z_i) f_L, with
// z_0 = zeta_0
Poly psi_all_open(const QkzContext& c);
// psi for the all-closings pattern: prod_{1<=i<j<=L+1} k(1/(s z_i), s z_j)
// ~f_L(s z), with z_{L+1} = zeta_L
Poly psi_all_close(const QkzContext& c);

// Z_L = tau_{L+2}(zeta_0, z, zeta_L) tau_{L+1}(zeta_0, z) tau_{L+1}(z, zeta_L)
// tau_L(z)
Poly normalization(const QkzContext& c);
Cyclo normalization_homogeneous(int L, const Cyclo& zeta0, const Cyclo& zetaL);

// evaluation of the closed forms at a point
Cyclo eval_at(const QkzContext& c, const Poly& p, const TransferPoint<Cyclo>& pt);

// ---- states ----------------------------------------------------------------

enum class Anchor { ExtremalOpen, TotalSum };

struct GroundStateExact {
  int L = 0;
  TransferPoint<Cyclo> pt;
  Cyclo s = Cyclo::one();
  std::vector<Cyclo> psi;  // indexed by the link-pattern basis order
  Cyclo sum() const {
    Cyclo t(0);
    for (auto& v : psi) t += v;
    return t;
  }
};

struct GroundStateNumeric {
  int L = 0;
  TransferPoint<CNum> pt;
  std::vector<CNum> psi;
};

// Exact null vector of T - 1 at the point, unique up to scale (rank checked),
// normalised per the anchor.
GroundStateExact solve_exact(const TransferPoint<Cyclo>& pt, const Cyclo& s = Cyclo::one(),
                             Anchor anchor = Anchor::ExtremalOpen);
GroundStateNumeric solve_numeric(const TransferPoint<CNum>& pt,
                                 Anchor anchor = Anchor::ExtremalOpen);

// Full symbolic solutions for L = 1, 2 (components in the basis order).
std::vector<RationalFn> solve_symbolic(const QkzContext& c);

// System-size-3 solution via the exchange-equation chain. At b = 1 the two
// middle components are individually undetermined; only their sum is fixed.
struct SizeThreeSolution {
  QkzContext ctx;
  std::vector<RationalFn> psi;  // index 1..8 in the basis order; 5 and 7 empty at b = 1
  RationalFn sum_5_7;
  bool generic_b = false;
  VarId b_var = -1;
};
SizeThreeSolution solve_symbolic_L3(bool generic_b);

// ---- batteries --------------------------------------------------------------

Report qkz_check_symbolic(int L);              // L <= 2, exact in all variables
Report qkz_check_points(int L, uint64_t seed); // paired exact points, L <= 4
Report hecke_relations(int L, int trials, uint64_t seed);
Report extremal_component_checks(int L);       // recursions and degree bounds
Report normalization_checks(int L, uint64_t seed);
Report component_recursion_check(int L, uint64_t seed);
Report size_three_checks(uint64_t seed);
Report positivity_check(int L, uint64_t seed);

// Dimension of the solution space of the pointwise exchange system on the
// signed-permutation orbit of a random point, at quotient parameter b.
int qkz_orbit_nullity(int L, double b, uint64_t seed);

}  // namespace tbloop::gs

// Boundary-to-boundary correlation functions: the marked transfer matrix
// (signed counting of boundary-to-boundary paths separating two marked
// vertices), brute-force expectation values contracted with the ground state
// and its dual, and the closed forms
//   X^{(k)} = z_k d/dz_k u_L,   Y_L = w d/dw u_{L+2}(..., v/q, w)|_{v=w},
// where u_L is the log of a ratio of four staircase characters. X and Y are
// evaluated through logarithmic derivatives of the character polynomials, so
// no logarithm is ever taken.

#pragma once

#include <complex>

#include "tbloop/groundstate.hpp"
#include "tbloop/lattice_checks.hpp"

namespace tbloop::corr {

using CNum = std::complex<double>;
using gs::GroundStateNumeric;
using lattice::Matrix;
using lattice::TransferPoint;

struct Marker {
  int k = 1;        // 1 .. L+1
  char level = 'b'; // 'b', 'm', 't'
  friend bool operator==(const Marker& a, const Marker& b) {
    return a.k == b.k && a.level == b.level;
  }
};

// Marked-edge data for a pair of adjacent markers.
lattice::MarkedEdges adjacent_marks(Marker x1, Marker x2);

// Pairing matrix of the marked double row: entry (beta_up, alpha) is the sum
// over face configurations of the coefficient times the signed count of
// boundary-to-boundary paths separating the two markers.
Matrix<CNum> flow_matrix(const TransferPoint<CNum>& pt, Marker x1, Marker x2);

// The dual state of Lemma-dual type: component at an upper pattern equals the
// ground-state component of the reflected pattern with swapped boundary
// parameters and reversed inhomogeneities.
std::vector<CNum> dual_state(const TransferPoint<CNum>& pt);

// <dual| F^{x1,x2} |psi> / Z^2 for an arbitrary marker pair (additivity chain
// over adjacent steps).
CNum expectation_bruteforce(const TransferPoint<CNum>& pt, Marker x1, Marker x2);

// Always-1 pairing of bare link patterns (the denominator anchor).
long lp_inner(const tl::LinkPattern& upper, const tl::LinkPattern& lower);

// ---- closed forms -----------------------------------------------------------

// (z_k d/dz_k tau_lambda)/tau_lambda at given argument values; slot counts
// from 0.
CNum dlog_tau(const sym::Partition& lam, const std::vector<CNum>& args, int slot);

CNum X_formula(int k, const TransferPoint<CNum>& pt);
CNum Y_formula(const TransferPoint<CNum>& pt);  // uses pt.w
// u_L itself as the exact character ratio (no logarithm): the four factors
// tau_{L+1}(zeta0, z) tau_{L+1}(zetaL, z) / (tau_L(z) tau_{L+2}(zeta0, zetaL, z))
CNum u_ratio(const TransferPoint<CNum>& pt);

// ---- batteries --------------------------------------------------------------

Report closed_vs_bruteforce(int L, int n_points, uint64_t seed);
Report symmetry_battery(int L, uint64_t seed);
Report recursion_battery(uint64_t seed);  // L = 3 against L = 1, 2
Report conjecture_checks(int L, uint64_t seed);
Report degree_width_check(int L);

}  // namespace tbloop::corr

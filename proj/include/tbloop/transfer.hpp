// Sklyanin's double-row transfer matrix, assembled by enumerating the two
// configurations of each of the 2L+2 faces and composing the resulting planar
// diagram with basis link patterns. The same sweep, with crossing counters
// switched on, produces the marked observables of the correlation module.
//
// Face geometry (one double row, sites 1..L):
//
//        top sites      1         2        ...   L
//                    ___|_________|________ ..___|____
//   upper row       | T_1 . W<--- T_2 <---  ... T_L . |   <- aux runs right
//   (aux w^-1)    [K0]---------------------------- [KL]      to left
//   lower row       | B_1 ---> W . B_2 --->  .. B_L . |   <- aux runs left
//        (aux w)    |___|_________|________ ..___|____|      to right
//                       |         |              |
//                     pattern hanging below
//
// Each bulk face has ports S (below), N (above), W, E and two loop
// configurations: {S-W, N-E} and {S-E, N-W}. The first carries the
// "pass" coefficient [q z/w]/[q w/z] of R(w, z); the second carries
// [z/w]/[q w/z]. The boundary triangles either join their two ports (the
// aux line turns) or connect both to the boundary.

#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "tbloop/algebra.hpp"
#include "tbloop/spectral.hpp"

namespace tbloop::lattice {

using tbloop::Matrix;
using tl::AlgebraParams;
using tl::LinkPattern;
using tl::LoopWeights;
using tl::PathData;
using tl::StripFrontier;

template <class S>
struct TransferPoint {
  S w{1};
  std::vector<S> zs;
  S zeta0{1}, zetaL{1};

  int L() const { return static_cast<int>(zs.size()); }
};

// Scalar constants entering the face weights: q and the boundary half-angle
// phases e^{i omega_i/2}. At the combinatorial point omega = -2 gamma both
// phases equal q^{-1}.
template <class S>
struct FacePhases {
  S q;
  S eihw0, eihwL;

  static FacePhases specialization() {
    S q = spec_q();
    return {q, S(1) / q, S(1) / q};
  }
  static S spec_q() {
    if constexpr (std::is_same_v<S, Cyclo>)
      return Cyclo::q();
    else
      return S(Cyclo::q().to_complex());
  }
};

inline FacePhases<std::complex<double>> phases_from_angles(std::complex<double> gamma,
                                                           std::complex<double> omega0,
                                                           std::complex<double> omegaL) {
  const std::complex<double> I(0, 1);
  return {std::exp(I * gamma), std::exp(I * omega0 / 2.0), std::exp(I * omegaL / 2.0)};
}

// Baxterised operators on the link pattern space.
template <class S>
Matrix<S> r_check(const S& z, int i, int L, const AlgebraParams<S>& params, const S& q,
                  std::optional<std::complex<double>> kappa_q = std::nullopt) {
  S den = bracket(q * z);
  if (den == S(0)) throw PoleAtParameter("r_check: [q z] = 0");
  S a = bracket(q / z) / den, b = S(0) - bracket(z) / den;
  if constexpr (!std::is_same_v<S, Cyclo>) {
    if (kappa_q) {
      S kap = kappa(z, *kappa_q);
      a = a / kap;
      b = b / kap;
    }
  }
  Matrix<S> m = a * Matrix<S>::identity(1 << L) + b * tl::generator_matrix(i, L, params);
  return m;
}

template <class S>
Matrix<S> boundary_check(const S& z, const S& zeta, int which, int L,
                         const AlgebraParams<S>& params, const FacePhases<S>& ph) {
  const S& eihw = (which == 0) ? ph.eihw0 : ph.eihwL;
  S den = k_general(S(1) / z, zeta, eihw);
  if (den == S(0)) throw PoleAtParameter("boundary_check: k(1/z, zeta) = 0");
  S cid = k_general(z, zeta, eihw) / den;
  S ce = bracket(ph.q * eihw * eihw) * bracket(z * z) / den;
  return cid * Matrix<S>::identity(1 << L) +
         ce * tl::generator_matrix(which == 0 ? 0 : L, L, params);
}

template <class S>
Matrix<S> k0_check(const S& z, const S& zeta, int L, const AlgebraParams<S>& params,
                   const FacePhases<S>& ph) {
  return boundary_check(z, zeta, 0, L, params, ph);
}
template <class S>
Matrix<S> kL_check(const S& z, const S& zeta, int L, const AlgebraParams<S>& params,
                   const FacePhases<S>& ph) {
  return boundary_check(z, zeta, 1, L, params, ph);
}

// Port edges of the double row, for marker crossing counts.
enum class Edge { BotAux, TopAux, BotQ, MidQ, TopQ };
struct EdgeRef {
  Edge kind;
  int k;  // BotAux/TopAux: 1..L+1 (at x = k-1); BotQ/MidQ/TopQ: 1..L (column)
  friend bool operator==(const EdgeRef& a, const EdgeRef& b) {
    return a.kind == b.kind && a.k == b.k;
  }
};

struct MarkedEdges {
  std::vector<EdgeRef> seg;  // edges crossed by the marker segment
  std::vector<EdgeRef> ray;  // port edges crossed by the upward ray from x_1
  int ray_col = 0;           // ray at x = ray_col - 1 (for upper-pattern arcs)
  bool line_hits_ray = true; // an upper line always crosses the ray

  bool seg_has(Edge e, int k) const {
    for (auto& r : seg)
      if (r.kind == e && r.k == k) return true;
    return false;
  }
  bool ray_has(Edge e, int k) const {
    for (auto& r : ray)
      if (r.kind == e && r.k == k) return true;
    return false;
  }
};

// Face coefficient table for one evaluation point.
template <class S>
struct FaceTable {
  // per column i (1-based): {pass = S-W/N-E, cross = S-E/N-W}
  std::vector<std::array<S, 2>> bot, top;
  std::array<S, 2> k0;  // {join, boundary}
  std::array<S, 2> kL;

  static FaceTable build(const TransferPoint<S>& pt, const FacePhases<S>& ph) {
    int L = pt.L();
    FaceTable t;
    t.bot.resize(static_cast<size_t>(L) + 1);
    t.top.resize(static_cast<size_t>(L) + 1);
    const S& q = ph.q;
    for (int i = 1; i <= L; ++i) {
      const S& z = pt.zs[static_cast<size_t>(i - 1)];
      S denb = bracket(q * pt.w / z);
      S dent = bracket(q * z * pt.w);
      if (denb == S(0) || dent == S(0)) throw PoleAtParameter("transfer: bulk face pole");
      // slot 0 = {S-W, N-E}, slot 1 = {S-E, N-W}; the configuration in which
      // the strand from below joins the aux line carries the e-type
      // coefficient [z'/w']/[q w'/z'] of its R(w', z') face
      t.bot[static_cast<size_t>(i)] = {bracket(z / pt.w) / denb, bracket(q * z / pt.w) / denb};
      t.top[static_cast<size_t>(i)] = {bracket(q / (z * pt.w)) / dent,
                                       bracket(S(1) / (z * pt.w)) / dent};
    }
    S den0 = k_general(pt.w / q, pt.zeta0, ph.eihw0);
    S denL = k_general(S(1) / pt.w, pt.zetaL, ph.eihwL);
    if (den0 == S(0) || denL == S(0)) throw PoleAtParameter("transfer: boundary face pole");
    S qw = q / pt.w;
    t.k0 = {k_general(qw, pt.zeta0, ph.eihw0) / den0,
            bracket(q * ph.eihw0 * ph.eihw0) * bracket(qw * qw) / den0};
    t.kL = {k_general(pt.w, pt.zetaL, ph.eihwL) / denL,
            bracket(q * ph.eihwL * ph.eihwL) * bracket(pt.w * pt.w) / denL};
    return t;
  }
};

// Continue the strands ending at (up_from, side_from) through a transmitting
// face: returns fresh ends {to_up, to_side} with to_up on up_from's strand and
// to_side on side_from's strand.
template <class S>
std::pair<int, int> relink(StripFrontier<S>& f, int up_from, int side_from) {
  auto [a, b] = f.fresh_pair();
  f.join(a, up_from);
  auto [c, d] = f.fresh_pair();
  f.join(c, side_from);
  return {b, d};
}

// One configured double-row sweep over a seeded frontier. Returns the frontier
// in its final state together with the site ends; the caller reads a pattern
// (transfer matrix) or caps with an upper pattern (observables).
//
// Configuration bits: bit 0 = K0, bits 1..L = bottom faces, bit L+1 = KL,
// bits L+2 .. 2L+1 = top faces (column L down to 1). Bit set = second
// configuration (cross / boundary).
template <class S>
void sweep_double_row(StripFrontier<S>& f, std::vector<int>& site, unsigned cfg, int L,
                      const MarkedEdges* marks) {
  auto mark = [&](int e, Edge kind, int k) {
    if (!marks) return;
    if (marks->seg_has(kind, k)) f.add_seg_crossing(e);
    if (marks->ray_has(kind, k)) f.add_ray_crossing(e);
  };
  if (marks)
    for (int i = 1; i <= L; ++i) mark(site[static_cast<size_t>(i)], Edge::BotQ, i);

  int aux, k0_upper;
  if (cfg & 1u) {
    aux = f.attach_new_left();
    k0_upper = f.attach_new_left();
  } else {
    auto [lo, up] = f.fresh_pair();
    aux = lo;
    k0_upper = up;
  }
  for (int i = 1; i <= L; ++i) {
    mark(aux, Edge::BotAux, i);
    int s = site[static_cast<size_t>(i)];
    if (cfg & (1u << i)) {
      // S-E, N-W: quantum continues right, aux turns up
      auto [n_end, e_end] = relink(f, aux, s);
      site[static_cast<size_t>(i)] = n_end;
      aux = e_end;
    } else {
      // S-W, N-E: quantum joins aux, fresh pair continues
      f.join(s, aux);
      auto [n_end, e_end] = f.fresh_pair();
      site[static_cast<size_t>(i)] = n_end;
      aux = e_end;
    }
    if (marks) mark(site[static_cast<size_t>(i)], Edge::MidQ, i);
  }
  mark(aux, Edge::BotAux, L + 1);
  if (cfg & (1u << (L + 1))) {
    f.attach_right(aux);
    aux = f.attach_new_right();
  }  // else: the aux line turns around the right triangle and keeps its strand
  mark(aux, Edge::TopAux, L + 1);
  for (int i = L; i >= 1; --i) {
    int s = site[static_cast<size_t>(i)];
    if (cfg & (1u << (L + 1 + (L - i + 1)))) {
      // S-E, N-W: quantum joins aux, fresh pair for (top site, next aux)
      f.join(s, aux);
      auto [n_end, w_end] = f.fresh_pair();
      site[static_cast<size_t>(i)] = n_end;
      aux = w_end;
    } else {
      // S-W, N-E: strands swap: aux goes to the top site, quantum becomes aux
      auto [n_end, w_end] = relink(f, aux, s);
      site[static_cast<size_t>(i)] = n_end;
      aux = w_end;
    }
    if (marks) {
      mark(site[static_cast<size_t>(i)], Edge::TopQ, i);
      mark(aux, Edge::TopAux, i);
    }
  }
  f.join(aux, k0_upper);
}

// Prefactor of configuration cfg: product of the chosen face coefficients.
template <class S>
S config_coefficient(const FaceTable<S>& t, unsigned cfg, int L) {
  S c = t.k0[(cfg & 1u) ? 1 : 0];
  for (int i = 1; i <= L; ++i) c = c * t.bot[static_cast<size_t>(i)][(cfg >> i) & 1u];
  c = c * t.kL[(cfg >> (L + 1)) & 1u];
  for (int i = 1; i <= L; ++i)
    c = c * t.top[static_cast<size_t>(i)][(cfg >> (L + 1 + (L - i + 1))) & 1u];
  return c;
}

// The double-row transfer matrix T_L(w; z_1..z_L; zeta_0, zeta_L).
template <class S>
Matrix<S> transfer_matrix(const TransferPoint<S>& pt, const AlgebraParams<S>& params,
                          const FacePhases<S>& ph) {
  int L = pt.L();
  auto table = FaceTable<S>::build(pt, ph);
  int dim = 1 << L;
  Matrix<S> T(dim, dim);
  unsigned ncfg = 1u << (2 * L + 2);
  for (unsigned a = 0; a < static_cast<unsigned>(dim); ++a) {
    LinkPattern alpha(L, a);
    for (unsigned cfg = 0; cfg < ncfg; ++cfg) {
      S coeff = config_coefficient(table, cfg, L);
      if (coeff == S(0)) continue;
      StripFrontier<S> f(params.w, L);
      auto site = f.seed_pattern(alpha);
      sweep_double_row(f, site, cfg, L, nullptr);
      LinkPattern beta = f.read_pattern(site);
      int r = static_cast<int>(beta.index());
      T(r, static_cast<int>(a)) = T(r, static_cast<int>(a)) + coeff * f.weight;
    }
  }
  return T;
}

inline TransferPoint<Cyclo> exact_point(const Cyclo& w, const std::vector<Cyclo>& zs,
                                        const Cyclo& zeta0, const Cyclo& zetaL) {
  return TransferPoint<Cyclo>{w, zs, zeta0, zetaL};
}

// Cap the frontier with an upward link pattern attached from above, closing
// the composite diagram. Arcs are glued innermost first; boundary links attach
// in the order of their vertical positions on the strip edges. In flow mode
// the marks supply the crossing counts of the upper arcs with the sign ray.
template <class S>
void cap_with_upper(StripFrontier<S>& f, const std::vector<int>& site, const LinkPattern& up,
                    const MarkedEdges* marks = nullptr) {
  int L = up.L;
  auto partner = up.matching();
  auto ray_crossings_arc = [&](int a, int b) -> long {
    return (marks && a < marks->ray_col && marks->ray_col <= b) ? 1 : 0;
  };
  std::vector<std::pair<int, int>> arcs;
  for (int a = 1; a <= L; ++a) {
    int b = partner[static_cast<size_t>(a)];
    if (b > a && b <= L) arcs.push_back({a, b});
  }
  std::sort(arcs.begin(), arcs.end(),
            [](auto& x, auto& y) { return x.second - x.first < y.second - y.first; });
  for (auto& [a, b] : arcs) {
    f.add_ray_crossing(site[static_cast<size_t>(a)], ray_crossings_arc(a, b));
    f.join(site[static_cast<size_t>(a)], site[static_cast<size_t>(b)]);
  }
  for (int a = 1; a <= L; ++a) {  // left links, increasing site order
    if (partner[static_cast<size_t>(a)] != tl::kLeftBoundary) continue;
    if (marks && a >= marks->ray_col) f.add_ray_crossing(site[static_cast<size_t>(a)]);
    f.attach_left(site[static_cast<size_t>(a)]);
  }
  for (int a = L; a >= 1; --a) {  // right links, decreasing site order
    if (partner[static_cast<size_t>(a)] != L + 1) continue;
    if (marks && a < marks->ray_col) f.add_ray_crossing(site[static_cast<size_t>(a)]);
    f.attach_right(site[static_cast<size_t>(a)]);
  }
  if (up.throughlines()) {
    if (f.flow_mode)
      f.add_free_path(PathData{0, marks && marks->line_hits_ray ? 1 : 0});
    else
      f.add_upper_line();
  }
}

// Pairing matrix P(beta_up, alpha) = sum over configurations of the face
// coefficient times the closed-composite weight; at the combinatorial point
// every entry is 1, at generic weights it realises the transfer matrix inside
// the link-pattern pairing.
template <class S>
Matrix<S> pairing_matrix(const TransferPoint<S>& pt, const AlgebraParams<S>& params,
                         const FacePhases<S>& ph) {
  int L = pt.L();
  auto table = FaceTable<S>::build(pt, ph);
  int dim = 1 << L;
  Matrix<S> P(dim, dim);
  for (unsigned a = 0; a < static_cast<unsigned>(dim); ++a) {
    LinkPattern alpha(L, a);
    for (unsigned cfg = 0; cfg < (1u << (2 * L + 2)); ++cfg) {
      S coeff = config_coefficient(table, cfg, L);
      if (coeff == S(0)) continue;
      StripFrontier<S> base(params.w, L);
      auto site = base.seed_pattern(alpha);
      sweep_double_row(base, site, cfg, L, nullptr);
      for (unsigned b = 0; b < static_cast<unsigned>(dim); ++b) {
        StripFrontier<S> f = base;
        cap_with_upper(f, site, LinkPattern(L, b));
        P(static_cast<int>(b), static_cast<int>(a)) =
            P(static_cast<int>(b), static_cast<int>(a)) + coeff * f.weight;
      }
    }
  }
  return P;
}

}  // namespace tbloop::lattice

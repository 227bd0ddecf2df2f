#include "tbloop/groundstate.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <numeric>

#include "tbloop/lattice_checks.hpp"

namespace tbloop::gs {

using lattice::FacePhases;
using lattice::transfer_matrix;
using sym::PolyArg;
using sym::staircase;
using tl::AlgebraParams;
using tl::LinkPattern;

namespace {

PolyArg scaled_sq_var(VarId v, const Cyclo& s) {
  return PolyArg::monomial(Monomial::single(v, 2), s * s);
}
PolyArg scaled_sq_const(const Cyclo& c, const Cyclo& s) {
  return PolyArg::constant(s * s * c * c);
}

Cyclo sign_pm(int exponent) { return exponent % 2 ? -Cyclo::one() : Cyclo::one(); }

// k(1/(s z_i), s z_j) = [1/(q s^2 z_i z_j)] [z_j/(q z_i)]
Poly k_inv_scaled(VarId zi, VarId zj, const Cyclo& s) {
  Cyclo q = Cyclo::q();
  return bracket_mono((q * s * s).inverse(), zi, -1, zj, -1) *
         bracket_mono(q.inverse(), zj, 1, zi, -1);
}

}  // namespace

Poly f_symmetric(const QkzContext& c) {
  int L = c.L;
  std::vector<PolyArg> big, small;
  for (int i = 1; i <= L; ++i) {
    big.push_back(sym::squared_var(c.z[static_cast<size_t>(i)]));
    small.push_back(sym::squared_var(c.z[static_cast<size_t>(i)]));
  }
  big.push_back(sym::squared_var(c.zetaL));
  Poly f = sym::chi(staircase(L + 1), big) * sym::chi(staircase(L), small);
  int e = (L * (L + 1) / 2) % 2;
  return e ? -f : f;
}

Poly f_tilde_symmetric(const QkzContext& c) {
  int L = c.L;
  std::vector<PolyArg> big, small;
  big.push_back(scaled_sq_var(c.zeta0, c.s));
  for (int i = 1; i <= L; ++i) {
    big.push_back(scaled_sq_var(c.z[static_cast<size_t>(i)], c.s));
    small.push_back(scaled_sq_var(c.z[static_cast<size_t>(i)], c.s));
  }
  Poly f = sym::chi(staircase(L + 1), big) * sym::chi(staircase(L), small);
  Cyclo s2L = (c.s * c.s).pow(L);
  int e = (L * (L + 1) / 2) % 2;
  return (e ? -s2L : s2L) * f;
}

Poly psi_all_open(const QkzContext& c) {
  int L = c.L;
  Poly p = f_symmetric(c);
  auto zvar = [&](int i) { return i == 0 ? c.zeta0 : c.z[static_cast<size_t>(i)]; };
  for (int i = 0; i <= L; ++i)
    for (int j = i + 1; j <= L; ++j) p *= k_poly(zvar(j), zvar(i));
  return p;
}

Poly psi_all_close(const QkzContext& c) {
  int L = c.L;
  Poly p = f_tilde_symmetric(c);
  auto zvar = [&](int i) { return i == L + 1 ? c.zetaL : c.z[static_cast<size_t>(i)]; };
  for (int i = 1; i <= L + 1; ++i)
    for (int j = i + 1; j <= L + 1; ++j) p *= k_inv_scaled(zvar(i), zvar(j), c.s);
  return p;
}

Poly normalization(const QkzContext& c) {
  int L = c.L;
  std::vector<PolyArg> zz;
  for (int i = 1; i <= L; ++i) zz.push_back(sym::squared_var(c.z[static_cast<size_t>(i)]));
  std::vector<PolyArg> a0{sym::squared_var(c.zeta0)};
  a0.insert(a0.end(), zz.begin(), zz.end());
  std::vector<PolyArg> aL = zz;
  aL.push_back(sym::squared_var(c.zetaL));
  std::vector<PolyArg> a0L = a0;
  a0L.push_back(sym::squared_var(c.zetaL));
  return sym::chi(staircase(L + 2), a0L) * sym::chi(staircase(L + 1), a0) *
         sym::chi(staircase(L + 1), aL) * sym::chi(staircase(L), zz);
}

Cyclo normalization_homogeneous(int L, const Cyclo& zeta0, const Cyclo& zetaL) {
  std::vector<Cyclo> zz(static_cast<size_t>(L), Cyclo::one());
  std::vector<Cyclo> a0{zeta0}, aL = zz, a0L{zeta0};
  a0.insert(a0.end(), zz.begin(), zz.end());
  aL.push_back(zetaL);
  a0L.insert(a0L.end(), zz.begin(), zz.end());
  a0L.push_back(zetaL);
  return sym::tau_eval(staircase(L + 2), a0L) * sym::tau_eval(staircase(L + 1), a0) *
         sym::tau_eval(staircase(L + 1), aL) * sym::tau_eval(staircase(L), zz);
}

Cyclo eval_at(const QkzContext& c, const Poly& p, const TransferPoint<Cyclo>& pt) {
  std::map<VarId, Cyclo> point;
  for (int i = 1; i <= c.L; ++i)
    point[c.z[static_cast<size_t>(i)]] = pt.zs[static_cast<size_t>(i - 1)];
  point[c.zeta0] = pt.zeta0;
  point[c.zetaL] = pt.zetaL;
  return p.eval(point);
}

GroundStateExact solve_exact(const TransferPoint<Cyclo>& pt, const Cyclo& s, Anchor anchor) {
  int L = pt.L();
  auto params = AlgebraParams<Cyclo>::specialization();
  auto ph = FacePhases<Cyclo>::specialization();
  auto T = transfer_matrix(pt, params, ph);
  int dim = 1 << L;
  auto basis = null_space(T - Matrix<Cyclo>::identity(dim));
  if (basis.size() != 1)
    throw DegenerateEigenspace("solve_exact: eigenspace dimension " +
                               std::to_string(basis.size()));
  GroundStateExact g;
  g.L = L;
  g.pt = pt;
  g.s = s;
  g.psi = basis[0];
  QkzContext c = QkzContext::make(L, s);
  Cyclo scale;
  if (anchor == Anchor::ExtremalOpen) {
    Cyclo target = eval_at(c, psi_all_open(c), pt);
    if (g.psi[0].is_zero())
      throw DegenerateEigenspace("solve_exact: open component vanishes; anchor on the sum");
    scale = target / g.psi[0];
  } else {
    Cyclo target = eval_at(c, normalization(c), pt);
    Cyclo total = g.sum();
    if (total.is_zero()) throw DegenerateEigenspace("solve_exact: zero component sum");
    scale = target / total;
  }
  for (auto& v : g.psi) v *= scale;
  return g;
}

GroundStateNumeric solve_numeric(const TransferPoint<CNum>& pt, Anchor anchor) {
  int L = pt.L();
  auto params = AlgebraParams<CNum>::specialization();
  auto ph = FacePhases<CNum>::specialization();
  auto T = transfer_matrix(pt, params, ph);
  int dim = 1 << L;
  Eigen::MatrixXcd M(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) M(i, j) = T(i, j);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
  int best = 0, near = 0;
  for (int i = 0; i < dim; ++i) {
    if (std::abs(es.eigenvalues()(i) - CNum(1)) < 1e-8) ++near;
    if (std::abs(es.eigenvalues()(i) - CNum(1)) < std::abs(es.eigenvalues()(best) - CNum(1)))
      best = i;
  }
  if (near != 1) throw DegenerateEigenspace("solve_numeric: eigenvalue-1 multiplicity " +
                                            std::to_string(near));
  GroundStateNumeric g;
  g.L = L;
  g.pt = pt;
  g.psi.resize(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) g.psi[static_cast<size_t>(i)] = es.eigenvectors()(i, best);
  // evaluate the anchor with complex arithmetic through the exact closed forms
  QkzContext c = QkzContext::make(L);
  std::map<VarId, CNum> point;
  for (int i = 1; i <= L; ++i) point[c.z[static_cast<size_t>(i)]] = pt.zs[static_cast<size_t>(i - 1)];
  point[c.zeta0] = pt.zeta0;
  point[c.zetaL] = pt.zetaL;
  CNum scale;
  if (anchor == Anchor::ExtremalOpen) {
    scale = psi_all_open(c).eval_complex(point) / g.psi[0];
  } else {
    CNum total = 0;
    for (auto& v : g.psi) total += v;
    scale = normalization(c).eval_complex(point) / total;
  }
  for (auto& v : g.psi) v *= scale;
  return g;
}

std::vector<RationalFn> solve_symbolic(const QkzContext& c) {
  if (c.L == 1) {
    // basis order: "(", ")"
    RationalFn open{-Cyclo::one() * k_poly(c.z[1], c.zeta0)};
    RationalFn close{(-(c.s * c.s)) * k_inv_scaled(c.z[1], c.zetaL, c.s)};
    return {open, close};
  }
  if (c.L == 2) {
    // basis order: "((", "()", ")(", "))"
    RationalFn oo{psi_all_open(c)};
    RationalFn cc{psi_all_close(c)};
    RationalFn oc = s_op(c, 0, cc).simplify(200000);   // "()" from "))"
    RationalFn co = (s_op(c, 1, oc) - cc - oo).simplify(200000);  // ")("
    return {oo, oc, co, cc};
  }
  throw std::invalid_argument("solve_symbolic: full solutions only for L = 1, 2");
}

SizeThreeSolution solve_symbolic_L3(bool generic_b) {
  SizeThreeSolution sol;
  sol.ctx = QkzContext::make(3);
  sol.generic_b = generic_b;
  const QkzContext& c = sol.ctx;
  sol.psi.assign(9, RationalFn::zero());
  // basis order: 1 "(((", 2 "(()", 3 "()(", 4 "())", 5 ")((", 6 ")()",
  //              7 "))(", 8 ")))"
  sol.psi[1] = RationalFn(psi_all_open(c));
  RationalFn b = generic_b ? RationalFn::variable(var("b")) : RationalFn::one();
  if (generic_b) sol.b_var = var("b");
  const size_t cap = 800000;
  sol.psi[2] = s_op(c, 3, sol.psi[1]).simplify(cap);
  sol.psi[3] = (s_op(c, 2, sol.psi[2]) - sol.psi[1]).simplify(cap);
  sol.psi[4] = (s_op(c, 3, sol.psi[3]) / b).simplify(cap);
  if (generic_b) {
    RationalFn s1psi4 = s_op(c, 1, sol.psi[4]).simplify(cap);
    RationalFn rhs = (s_op(c, 3, s_op(c, 2, s1psi4).simplify(cap)) - s1psi4 + sol.psi[4])
                         .simplify(cap);
    sol.psi[8] = (rhs / (b - RationalFn::one())).simplify(cap);
    sol.psi[6] = (s1psi4 - sol.psi[8]).simplify(cap);
    RationalFn s1psi3 = s_op(c, 1, sol.psi[3]).simplify(cap);
    sol.psi[5] = ((s1psi3 - sol.psi[1] - sol.psi[2] - s_op(c, 2, sol.psi[6]) + sol.psi[4] +
                   sol.psi[8]) /
                  (b - RationalFn::one()))
                     .simplify(cap);
    sol.psi[7] = (s1psi3 - sol.psi[1] - sol.psi[2] - b * sol.psi[5]).simplify(cap);
    sol.sum_5_7 = (sol.psi[5] + sol.psi[7]).simplify(cap);
  } else {
    sol.psi[8] = RationalFn(psi_all_close(c));
    sol.psi[6] = (s_op(c, 1, sol.psi[4]) - sol.psi[8]).simplify(cap);
    sol.sum_5_7 = (s_op(c, 1, sol.psi[3]) - sol.psi[1] - sol.psi[2]).simplify(cap);
  }
  return sol;
}

// ---------------------------------------------------------------------------

Report qkz_check_symbolic(int L) {
  Report rep;
  QkzContext c = QkzContext::make(L);
  auto psis = solve_symbolic(c);
  std::string pstr = "L=" + std::to_string(L) + " symbolic";
  int dim = 1 << L;

  {
    // exchange form: sum_alpha psi_alpha e_i |alpha> = sum (-a_i psi) |alpha>
    auto params = AlgebraParams<Cyclo>::specialization();
    bool ok = true;
    for (int i = 0; i <= L; ++i) {
      std::vector<RationalFn> lhs(static_cast<size_t>(dim), RationalFn::zero());
      for (int a = 0; a < dim; ++a) {
        auto [beta, w] = tl::apply_generator(i, LinkPattern(L, static_cast<unsigned>(a)), params);
        lhs[beta.index()] += RationalFn(w) * psis[static_cast<size_t>(a)];
      }
      for (int a = 0; a < dim && ok; ++a) {
        RationalFn rhs = RationalFn::zero() - a_op(c, i, psis[static_cast<size_t>(a)]);
        ok = ok && (lhs[static_cast<size_t>(a)] == rhs);
      }
    }
    rep.push_back(CheckReport::exact("exchange-equations", "exchange-equations", pstr, ok));
  }
  {
    // R-check / K-check form with rational-function matrices
    auto paramsR = AlgebraParams<RationalFn>::from_weights(RationalFn::one(), RationalFn::one(),
                                                           RationalFn::one(), RationalFn::one());
    const Cyclo q = Cyclo::q();
    bool ok = true;
    for (int i = 1; i <= L - 1 && ok; ++i) {
      // R_i(z_i/z_{i+1}) = ([q z_{i+1}/z_i] - [z_i/z_{i+1}] e_i)/[q z_i/z_{i+1}]
      VarId zi = c.z[static_cast<size_t>(i)], zj = c.z[static_cast<size_t>(i) + 1];
      RationalFn a = br(q, zj, 1, zi, -1) / br(q, zi, 1, zj, -1);
      RationalFn bq = (RationalFn::zero() - br(Cyclo::one(), zi, 1, zj, -1)) /
                      br(q, zi, 1, zj, -1);
      auto M = a * Matrix<RationalFn>::identity(dim) +
               bq * tl::generator_matrix(i, L, paramsR);
      auto lhs = M.apply(psis);
      for (int t = 0; t < dim && ok; ++t)
        ok = ok && (lhs[static_cast<size_t>(t)] == pi_i(c, i, psis[static_cast<size_t>(t)]));
    }
    rep.push_back(CheckReport::exact("r-exchange", "exchange-equations", pstr, ok));
    // K_0(1/z_1, zeta_0)
    ok = true;
    {
      RationalFn kzi{bracket_mono(q.inverse(), c.z[1], -1, c.zeta0, -1) *
                     bracket_mono(q.inverse(), c.z[1], -1, c.zeta0, 1)};
      RationalFn kz{k_poly(c.z[1], c.zeta0)};
      RationalFn ce = RationalFn(Cyclo(bracket(q * q))) * br(Cyclo::one(), c.z[1], -2) / kz;
      RationalFn cid = kzi / kz;
      auto M = cid * Matrix<RationalFn>::identity(dim) +
               ce * tl::generator_matrix(0, L, paramsR);
      auto lhs = M.apply(psis);
      for (int t = 0; t < dim && ok; ++t)
        ok = ok && (lhs[static_cast<size_t>(t)] == pi_0(c, psis[static_cast<size_t>(t)]));
      rep.push_back(CheckReport::exact("k0-exchange", "exchange-equations", pstr, ok));
    }
    {
      // K_L(s z_L, s zeta_L)
      VarId zl = c.z[static_cast<size_t>(L)];
      Cyclo s2 = c.s * c.s;
      RationalFn knum{bracket_mono(q.inverse(), zl, 1, c.zetaL, -1) *
                      bracket_mono(s2 / q, zl, 1, c.zetaL, 1)};
      RationalFn kden{bracket_mono((q * s2).inverse(), zl, -1, c.zetaL, -1) *
                      bracket_mono(q.inverse(), zl, -1, c.zetaL, 1)};
      RationalFn ce = RationalFn(Cyclo(bracket(q * q))) * RationalFn(bracket_mono(s2, zl, 2)) / kden;
      RationalFn cid = knum / kden;
      auto M = cid * Matrix<RationalFn>::identity(dim) +
               ce * tl::generator_matrix(L, L, paramsR);
      auto lhs = M.apply(psis);
      bool okL = true;
      for (int t = 0; t < dim && okL; ++t)
        okL = okL && (lhs[static_cast<size_t>(t)] == pi_L(c, psis[static_cast<size_t>(t)]));
      rep.push_back(CheckReport::exact("kL-exchange", "exchange-equations", pstr, okL));
    }
  }
  {
    // vanishing / factorisation conditions on every component
    bool ok = true;
    for (int a = 0; a < dim && ok; ++a) {
      LinkPattern alpha(L, static_cast<unsigned>(a));
      auto partner = alpha.matching();
      const Poly num = psis[static_cast<size_t>(a)].as_polynomial();
      if (num.is_zero()) continue;
      if (partner[1] != tl::kLeftBoundary) {
        auto quo = num.try_divide(k_poly(c.z[1], c.zeta0));
        ok = ok && quo.has_value();
        if (ok) {
          Poly inv = quo->substitute_monomial(c.z[1], Cyclo::one(), c.z[1], -1);
          ok = ok && (inv == *quo);
        }
      }
      if (partner[static_cast<size_t>(L)] != L + 1) {
        auto quo = num.try_divide(k_inv_scaled(c.z[static_cast<size_t>(L)], c.zetaL, c.s));
        ok = ok && quo.has_value();
      }
      for (int i = 1; i <= L - 1 && ok; ++i) {
        if (partner[static_cast<size_t>(i)] == i + 1) continue;
        Poly sub = num.substitute_monomial(c.z[static_cast<size_t>(i) + 1], Cyclo::q(),
                                           c.z[static_cast<size_t>(i)], 1);
        ok = ok && sub.is_zero();
      }
    }
    rep.push_back(
        CheckReport::exact("component-vanishing-conditions", "component-vanishing", pstr, ok));
  }
  {
    // sum of components equals the four-character product
    RationalFn total = RationalFn::zero();
    for (auto& p : psis) total += p;
    rep.push_back(CheckReport::exact("sum-equals-normalization", "normalization-product", pstr,
                                     total == RationalFn(normalization(c))));
  }
  return rep;
}

namespace {

// Exact point-orbit evaluation of nested exchange operators: a function is a
// closure over the z-point, and each operator application branches into the
// permuted/inverted point. Keeps deep compositions (braid, quartic) cheap
// while staying in exact arithmetic.
struct ZPoint {
  std::vector<Cyclo> z;  // 1-based
  Cyclo zeta0, zetaL;
};
using PointFn = std::function<Cyclo(const ZPoint&)>;

PointFn a_op_val(int i, int L, PointFn f) {
  const Cyclo q = Cyclo::q();
  const Cyclo brq = bracket(q);
  if (i >= 1 && i <= L - 1) {
    return [=](const ZPoint& p) {
      auto g = [&](const ZPoint& r) {
        return bracket(r.z[static_cast<size_t>(i)] / (q * r.z[static_cast<size_t>(i) + 1])) /
               bracket(r.z[static_cast<size_t>(i)] / r.z[static_cast<size_t>(i) + 1]);
      };
      ZPoint ps = p;
      std::swap(ps.z[static_cast<size_t>(i)], ps.z[static_cast<size_t>(i) + 1]);
      return g(ps) * f(ps) + g(p) * f(p);
    };
  }
  if (i == 0) {
    return [=](const ZPoint& p) {
      auto g = [&](const ZPoint& r) {
        return k_spec(r.z[1].inverse(), r.zeta0) / (brq * bracket(r.z[1] * r.z[1]));
      };
      ZPoint pi = p;
      pi.z[1] = p.z[1].inverse();
      return g(pi) * f(pi) + g(p) * f(p);
    };
  }
  return [=](const ZPoint& p) {  // i == L, s = 1
    auto g = [&](const ZPoint& r) {
      return k_spec(r.z[static_cast<size_t>(L)], r.zetaL) /
             (brq * bracket(r.z[static_cast<size_t>(L)] * r.z[static_cast<size_t>(L)]));
    };
    ZPoint pi = p;
    pi.z[static_cast<size_t>(L)] = p.z[static_cast<size_t>(L)].inverse();
    return Cyclo(0) - (g(pi) * f(pi) + g(p) * f(p));
  };
}

}  // namespace

Report hecke_relations(int L, int trials, uint64_t seed) {
  Report rep;
  QkzContext c = QkzContext::make(L);
  Rng rng(seed);
  auto random_fn = [&]() {
    Poly p;
    for (int t = 0; t < 3; ++t) {
      Monomial m;
      for (int i = 1; i <= L; ++i) {
        int e = static_cast<int>(rng.integer(-2, 2));
        if (e) m = m * Monomial::single(c.z[static_cast<size_t>(i)], e);
      }
      p.add_term(m, Cyclo(rng.rational()));
    }
    if (p.is_zero()) p = Poly::one();
    return RationalFn(p);
  };
  auto random_zpoint = [&]() {
    // z values pairwise distinct and distinct from each other's inverses, so
    // no bracket in the operator coefficients vanishes anywhere on the orbit
    ZPoint p;
    p.z.resize(static_cast<size_t>(L) + 1, Cyclo::one());
    std::vector<Rat> used;
    auto fresh = [&]() {
      while (true) {
        Rat r = rng.positive_rational(12);
        bool ok = true;
        for (auto& u : used) ok = ok && !(u == r) && !(u * r == 1);
        if (ok) {
          used.push_back(r);
          return Cyclo(r);
        }
      }
    };
    for (int i = 1; i <= L; ++i) p.z[static_cast<size_t>(i)] = fresh();
    p.zeta0 = fresh();
    p.zetaL = fresh();
    return p;
  };
  const Cyclo qq = Cyclo::q() + Cyclo::q_inv();  // = -1
  bool ann = true, idem = true, braid = true, quartic = true, s_from_a = true;
  for (int t = 0; t < trials; ++t) {
    RationalFn f = random_fn();
    // shallow relations symbolically, in all variables
    for (int i = 0; i <= L; ++i) {
      ann = ann && a_op(c, i, s_op(c, i, f)).is_zero() && s_op(c, i, a_op(c, i, f)).is_zero();
      idem = idem && (a_op(c, i, a_op(c, i, f)) == RationalFn(qq) * a_op(c, i, f));
      s_from_a = s_from_a && (s_op(c, i, f) == RationalFn::zero() - f - a_op(c, i, f));
    }
    // deep relations through exact point-orbit evaluation
    PointFn fv = [f, &c, L](const ZPoint& p) {
      std::map<VarId, Cyclo> pt;
      for (int i = 1; i <= L; ++i) pt[c.z[static_cast<size_t>(i)]] = p.z[static_cast<size_t>(i)];
      pt[c.zeta0] = p.zeta0;
      pt[c.zetaL] = p.zetaL;
      return f.eval(pt);
    };
    auto Aop = [&](int i, PointFn g) { return a_op_val(i, L, std::move(g)); };
    for (int i = 1; i <= L - 2; ++i) {
      auto lhs = Aop(i, Aop(i + 1, Aop(i, fv)));
      auto rhs = Aop(i + 1, Aop(i, Aop(i + 1, fv)));
      auto li = Aop(i, fv), ri = Aop(i + 1, fv);
      for (int r = 0; r < 6; ++r) {
        ZPoint p = random_zpoint();
        braid = braid && (lhs(p) - li(p) == rhs(p) - ri(p));
      }
    }
    if (L >= 2) {
      auto check_quartic = [&](int x, int y) {
        auto lhs = Aop(x, Aop(y, Aop(x, Aop(y, fv))));
        auto rhs = Aop(y, Aop(x, Aop(y, Aop(x, fv))));
        auto lo = Aop(x, Aop(y, fv)), ro = Aop(y, Aop(x, fv));
        for (int r = 0; r < 6; ++r) {
          ZPoint p = random_zpoint();
          quartic = quartic && (lhs(p) - lo(p) == rhs(p) - ro(p));
        }
      };
      check_quartic(0, 1);
      check_quartic(L, L - 1);
    }
  }
  std::string pstr = "L=" + std::to_string(L) + " trials=" + std::to_string(trials);
  rep.push_back(CheckReport::exact("a-s-annihilation", "hecke-relations", pstr, ann));
  rep.push_back(CheckReport::exact("a-quadratic", "hecke-relations", pstr, idem));
  rep.push_back(CheckReport::exact("a-braid", "hecke-relations", pstr, braid));
  rep.push_back(CheckReport::exact("a-boundary-quartic", "hecke-relations", pstr, quartic));
  rep.push_back(CheckReport::exact("s-equals-minus-one-minus-a", "hecke-relations", pstr, s_from_a));
  return rep;
}

Report extremal_component_checks(int L) {
  Report rep;
  QkzContext c = QkzContext::make(L);
  std::string pstr = "L=" + std::to_string(L) + " symbolic";
  const Cyclo q = Cyclo::q();
  {
    // f_L(.., z_i, s^2 q z_i, ..) = k(z_i, zeta_L) prod_{j != i, i+1}
    // k(z_i, z_j)^2 f_{L-2}
    bool ok = true;
    if (L >= 2) {
      Poly f = f_symmetric(c);
      int i = 1;
      Cyclo s2q = (c.s * c.s) * q;
      Poly lhs = f.substitute_monomial(c.z[static_cast<size_t>(i) + 1], s2q,
                                       c.z[static_cast<size_t>(i)], 1);
      QkzContext cs = QkzContext::make(L - 2);
      Poly fs = f_symmetric(cs);
      // rename the small system's variables onto z_{i+2}..z_L, zeta_L fixed
      std::map<VarId, VarId> names;
      for (int j = 1; j <= L - 2; ++j)
        names[cs.z[static_cast<size_t>(j)]] = c.z[static_cast<size_t>(j + 2)];
      fs = fs.rename(names);
      Poly rhs = k_poly(c.z[static_cast<size_t>(i)], c.zetaL);
      for (int j = 1; j <= L; ++j) {
        if (j == i || j == i + 1) continue;
        Poly kk = k_poly(c.z[static_cast<size_t>(i)], c.z[static_cast<size_t>(j)]);
        rhs *= kk * kk;
      }
      rhs *= fs;
      ok = (lhs == rhs);
    }
    rep.push_back(CheckReport::exact("f-bulk-recursion", "extremal-recursion", pstr, ok));
  }
  {
    // f_L(z_1..z_{L-1}, zeta_L/q; zeta_0, zeta_L) =
    //   -prod_j k(1/zeta_L, z_j) f_{L-1}(z_1..z_{L-1}; zeta_0, zeta_L/q)
    Poly f = f_symmetric(c);
    Poly lhs = f.substitute_monomial(c.z[static_cast<size_t>(L)], q.inverse(), c.zetaL, 1);
    QkzContext cs = QkzContext::make(L - 1);
    Poly fs = f_symmetric(cs);
    fs = fs.substitute_monomial(cs.zetaL, q.inverse(), c.zetaL, 1);
    Poly rhs = -Cyclo::one() * fs;
    for (int j = 1; j <= L - 1; ++j) {
      // k(1/zeta_L, z_j) = [1/(q zeta_L z_j)][z_j/(q zeta_L)]
      rhs *= bracket_mono(q.inverse(), c.zetaL, -1, c.z[static_cast<size_t>(j)], -1) *
             bracket_mono(q.inverse(), c.z[static_cast<size_t>(j)], 1, c.zetaL, -1);
    }
    rep.push_back(CheckReport::exact("f-boundary-recursion", "extremal-recursion", pstr,
                                     lhs == rhs));
  }
  {
    // tilde-f boundary recursion: ~f_L(q zeta_0, z_2..z_L) =
    //   -s^2 prod_j k(zeta_0, z_j) ~f_{L-1}(z_2..z_L; q zeta_0)
    Poly ft = f_tilde_symmetric(c);
    Poly lhs = ft.substitute_monomial(c.z[1], q, c.zeta0, 1);
    QkzContext cs = QkzContext::make(L - 1, c.s);
    Poly fts = f_tilde_symmetric(cs);
    std::map<VarId, VarId> names;
    for (int j = 1; j <= L - 1; ++j)
      names[cs.z[static_cast<size_t>(j)]] = c.z[static_cast<size_t>(j + 1)];
    fts = fts.rename(names);
    fts = fts.substitute_monomial(cs.zeta0, q, c.zeta0, 1);
    Poly rhs = (-(c.s * c.s)) * fts;
    for (int j = 2; j <= L; ++j) rhs *= k_poly(c.zeta0, c.z[static_cast<size_t>(j)]);
    rep.push_back(CheckReport::exact("f-tilde-boundary-recursion", "extremal-recursion", pstr,
                                     lhs == rhs));
  }
  if (L <= 3) {
    // top degree in each z_i^2 bounded by 2L - 1 on the known components
    bool ok = true;
    std::vector<Poly> comps;
    if (L <= 2) {
      for (auto& r : solve_symbolic(c)) comps.push_back(r.as_polynomial());
    } else {
      auto sol = solve_symbolic_L3(false);
      for (int a = 1; a <= 8; ++a)
        if (a != 5 && a != 7) comps.push_back(sol.psi[static_cast<size_t>(a)].as_polynomial());
      comps.push_back(sol.sum_5_7.as_polynomial());
    }
    for (auto& p : comps)
      for (int i = 1; i <= L; ++i) {
        ok = ok && p.max_degree(c.z[static_cast<size_t>(i)]) <= 2 * (2 * L - 1) &&
             p.min_degree(c.z[static_cast<size_t>(i)]) >= -2 * (2 * L - 1);
      }
    rep.push_back(CheckReport::exact("component-degree-bound", "degree-bound", pstr, ok));
  }
  return rep;
}

Report normalization_checks(int L, uint64_t seed) {
  Report rep;
  (void)seed;
  QkzContext c = QkzContext::make(L);
  std::string pstr = "L=" + std::to_string(L) + " symbolic";
  Poly Z = normalization(c);
  const Cyclo q = Cyclo::q();
  {
    // Z_L(z_{i+1} = q z_i) = p(z_i) Z_{L-2}
    bool ok = true;
    if (L >= 2) {
      int i = 1;
      Poly lhs = Z.substitute_monomial(c.z[static_cast<size_t>(i) + 1], q,
                                       c.z[static_cast<size_t>(i)], 1);
      QkzContext cs = QkzContext::make(L - 2);
      Poly Zs = normalization(cs);
      std::map<VarId, VarId> names;
      for (int j = 1; j <= L - 2; ++j)
        names[cs.z[static_cast<size_t>(j)]] = c.z[static_cast<size_t>(j + 2)];
      Zs = Zs.rename(names);
      Poly p = k_poly(c.z[static_cast<size_t>(i)], c.zeta0) *
               k_poly(c.z[static_cast<size_t>(i)], c.zeta0) *
               k_poly(c.z[static_cast<size_t>(i)], c.zetaL) *
               k_poly(c.z[static_cast<size_t>(i)], c.zetaL);
      for (int j = i + 2; j <= L; ++j) {
        Poly kk = k_poly(c.z[static_cast<size_t>(i)], c.z[static_cast<size_t>(j)]);
        p *= kk * kk * kk * kk;
      }
      ok = (lhs == p * Zs);
    }
    rep.push_back(CheckReport::exact("normalization-bulk-recursion", "normalization-recursion",
                                     pstr, ok));
  }
  {
    // symmetry of Z under every argument exchange and inversion
    bool ok = true;
    for (int i = 1; i <= L - 1; ++i) ok = ok && (swap_vars(Z, c.z[static_cast<size_t>(i)],
                                                           c.z[static_cast<size_t>(i) + 1]) == Z);
    ok = ok && (Z.substitute_monomial(c.z[1], Cyclo::one(), c.z[1], -1) == Z);
    ok = ok && (Z.substitute_monomial(c.z[static_cast<size_t>(L)], Cyclo::one(),
                                      c.z[static_cast<size_t>(L)], -1) == Z);
    ok = ok && (swap_vars(Z, c.zeta0, c.zetaL) == Z);
    rep.push_back(CheckReport::exact("normalization-symmetric", "normalization-symmetry", pstr,
                                     ok));
  }
  return rep;
}

Report qkz_check_points(int L, uint64_t seed) {
  Report rep;
  Rng rng(seed);
  QkzContext c = QkzContext::make(L);
  auto params = AlgebraParams<Cyclo>::specialization();
  auto ph = FacePhases<Cyclo>::specialization();
  const Cyclo q = Cyclo::q();
  std::string pstr = "L=" + std::to_string(L) + " exact points";
  int dim = 1 << L;

  auto pt = lattice::draw_exact_point(rng, L);
  auto g = solve_exact(pt);

  bool ok_r = true;
  for (int i = 1; i <= L - 1; ++i) {
    auto pts = pt;
    std::swap(pts.zs[static_cast<size_t>(i - 1)], pts.zs[static_cast<size_t>(i)]);
    auto gs = solve_exact(pts);
    auto R = lattice::r_check(pt.zs[static_cast<size_t>(i - 1)] / pt.zs[static_cast<size_t>(i)],
                              i, L, params, q);
    auto lhs = R.apply(g.psi);
    for (int t = 0; t < dim; ++t) ok_r = ok_r && (lhs[static_cast<size_t>(t)] == gs.psi[static_cast<size_t>(t)]);
  }
  rep.push_back(CheckReport::exact("r-exchange", "exchange-equations", pstr, ok_r));
  {
    auto pti = pt;
    pti.zs[0] = pt.zs[0].inverse();
    auto gi = solve_exact(pti);
    auto K0 = lattice::k0_check(pt.zs[0].inverse(), pt.zeta0, L, params, ph);
    auto lhs = K0.apply(g.psi);
    bool ok = true;
    for (int t = 0; t < dim; ++t) ok = ok && (lhs[static_cast<size_t>(t)] == gi.psi[static_cast<size_t>(t)]);
    rep.push_back(CheckReport::exact("k0-exchange", "exchange-equations", pstr, ok));
  }
  {
    auto ptr = pt;
    ptr.zs[static_cast<size_t>(L - 1)] = pt.zs[static_cast<size_t>(L - 1)].inverse();
    auto gr = solve_exact(ptr);
    auto KL = lattice::kL_check(pt.zs[static_cast<size_t>(L - 1)], pt.zetaL, L, params, ph);
    auto lhs = KL.apply(g.psi);
    bool ok = true;
    for (int t = 0; t < dim; ++t) ok = ok && (lhs[static_cast<size_t>(t)] == gr.psi[static_cast<size_t>(t)]);
    rep.push_back(CheckReport::exact("kL-exchange", "exchange-equations", pstr, ok));
  }
  {
    // vanishing at z_{i+1} = q z_i for components without the small link
    auto ptv = pt;
    int i = static_cast<int>(rng.integer(1, L - 1));
    ptv.zs[static_cast<size_t>(i)] = q * pt.zs[static_cast<size_t>(i - 1)];
    auto gv = solve_exact(ptv, Cyclo::one(), Anchor::TotalSum);
    bool ok = true;
    for (int a = 0; a < dim; ++a) {
      LinkPattern alpha(L, static_cast<unsigned>(a));
      if (alpha.matching()[static_cast<size_t>(i)] == i + 1) continue;
      ok = ok && gv.psi[static_cast<size_t>(a)].is_zero();
    }
    rep.push_back(CheckReport::exact("component-vanishing-at-qz", "component-vanishing", pstr, ok));
  }
  return rep;
}

Report component_recursion_check(int L, uint64_t seed) {
  Report rep;
  Rng rng(seed);
  QkzContext c = QkzContext::make(L);
  const Cyclo q = Cyclo::q();
  std::string pstr = "L=" + std::to_string(L) + " exact points";
  bool conjectural = L >= 4;

  auto pt = lattice::draw_exact_point(rng, L);
  {
    // bulk: psi^L_{phi_i alpha}(z_{i+1} = q z_i) = p(z_i) psi^{L-2}_alpha
    int i = static_cast<int>(rng.integer(1, L - 1));
    auto ptv = pt;
    ptv.zs[static_cast<size_t>(i)] = q * pt.zs[static_cast<size_t>(i - 1)];
    auto g = solve_exact(ptv, Cyclo::one(), Anchor::TotalSum);
    TransferPoint<Cyclo> small;
    small.w = pt.w;
    small.zeta0 = pt.zeta0;
    small.zetaL = pt.zetaL;
    for (int j = 1; j <= L; ++j)
      if (j != i && j != i + 1) small.zs.push_back(pt.zs[static_cast<size_t>(j - 1)]);
    Cyclo p = (k_spec(pt.zs[static_cast<size_t>(i - 1)], pt.zeta0) *
               k_spec(pt.zs[static_cast<size_t>(i - 1)], pt.zetaL));
    p = p * p;
    for (auto& zj : small.zs) {
      Cyclo kk = k_spec(pt.zs[static_cast<size_t>(i - 1)], zj);
      p *= kk.pow(4);
    }
    bool ok = true;
    if (L == 2) {
      ok = g.psi[LinkPattern("()").index()] == p;  // the size-0 state is the scalar 1
      for (unsigned a = 0; a < 4u; ++a)
        if (a != LinkPattern("()").index()) ok = ok && g.psi[a].is_zero();
    } else {
      auto gs = solve_exact(small, Cyclo::one(), Anchor::TotalSum);
      for (unsigned a = 0; a < (1u << (L - 2)); ++a) {
        auto big = tl::insert_small_link(LinkPattern(L - 2, a), i);
        ok = ok && (g.psi[big.index()] == p * gs.psi[a]);
      }
    }
    rep.push_back(CheckReport::exact("component-bulk-recursion p", "component-recursion", pstr,
                                     ok));
    if (conjectural) rep.back().flag_conjectural();
  }
  {
    // left boundary: psi^L(z_1 = q zeta_0) = r_0 phi_0 psi^{L-1}(; q zeta_0)
    auto ptv = pt;
    ptv.zs[0] = q * pt.zeta0;
    auto g = solve_exact(ptv, Cyclo::one(), Anchor::TotalSum);
    TransferPoint<Cyclo> small;
    small.w = pt.w;
    small.zeta0 = q * pt.zeta0;
    small.zetaL = pt.zetaL;
    small.zs.assign(pt.zs.begin() + 1, pt.zs.end());
    auto gs = solve_exact(small, Cyclo::one(), Anchor::TotalSum);
    Cyclo r0 = -k_spec(pt.zeta0, pt.zetaL);
    for (auto& zj : small.zs) {
      Cyclo kk = k_spec(pt.zeta0, zj);
      r0 *= kk * kk;
    }
    bool ok = true;
    for (unsigned a = 0; a < (1u << (L - 1)); ++a) {
      auto big = tl::insert_left_close(LinkPattern(L - 1, a));
      ok = ok && (g.psi[big.index()] == r0 * gs.psi[a]);
    }
    for (unsigned w = 0; w < (1u << L); ++w) {
      LinkPattern alpha(L, w);
      if (!alpha.is_close(1)) ok = ok && g.psi[w].is_zero();
    }
    rep.push_back(CheckReport::exact("component-left-recursion r0", "component-recursion", pstr,
                                     ok));
    if (conjectural) rep.back().flag_conjectural();
  }
  {
    // right boundary: psi^L(z_L = zeta_L/q) = r_L phi_L psi^{L-1}(; zeta_L/q)
    auto ptv = pt;
    ptv.zs[static_cast<size_t>(L - 1)] = pt.zetaL / q;
    auto g = solve_exact(ptv, Cyclo::one(), Anchor::TotalSum);
    TransferPoint<Cyclo> small;
    small.w = pt.w;
    small.zeta0 = pt.zeta0;
    small.zetaL = pt.zetaL / q;
    small.zs.assign(pt.zs.begin(), pt.zs.end() - 1);
    auto gs = solve_exact(small, Cyclo::one(), Anchor::TotalSum);
    // r_L = -s^2 k(1/(s zeta_L), s zeta_0) prod k(1/(s zeta_L), s z_i)^2, s = 1
    Cyclo rL = -k_spec(pt.zetaL.inverse(), pt.zeta0);
    for (auto& zj : small.zs) {
      Cyclo kk = k_spec(pt.zetaL.inverse(), zj);
      rL *= kk * kk;
    }
    bool ok = true;
    for (unsigned a = 0; a < (1u << (L - 1)); ++a) {
      auto big = tl::insert_right_open(LinkPattern(L - 1, a));
      ok = ok && (g.psi[big.index()] == rL * gs.psi[a]);
    }
    rep.push_back(CheckReport::exact("component-right-recursion rL", "component-recursion", pstr,
                                     ok));
    if (conjectural) rep.back().flag_conjectural();
  }
  return rep;
}

Report size_three_checks(uint64_t seed) {
  Report rep;
  Rng rng(seed);
  const std::string pstr = "L=3 symbolic";
  auto sol = solve_symbolic_L3(false);
  const QkzContext& c = sol.ctx;
  auto S = [&](int i, const RationalFn& f) { return s_op(c, i, f); };
  auto A = [&](int i, const RationalFn& f) { return a_op(c, i, f); };
  const auto& p = sol.psi;

  bool ann = true;
  for (int a : {1, 2, 3, 4}) ann = ann && A(0, p[static_cast<size_t>(a)]).is_zero();
  ann = ann && A(1, p[1]).is_zero() && A(1, p[2]).is_zero() && A(1, p[6]).is_zero() &&
        A(1, p[8]).is_zero() && A(1, sol.sum_5_7).is_zero();
  ann = ann && A(2, p[1]).is_zero() && A(2, p[3]).is_zero() && A(2, p[4]).is_zero() &&
        A(2, p[8]).is_zero() && A(2, sol.sum_5_7).is_zero();
  for (int a : {2, 4, 6, 8}) ann = ann && A(3, p[static_cast<size_t>(a)]).is_zero();
  rep.push_back(CheckReport::exact("annihilation-equations", "size-three-system", pstr, ann));

  bool sys = true;
  sys = sys && (S(0, p[6]) == p[2]);
  sys = sys && (S(0, p[8]) == p[4]);
  sys = sys && (S(0, sol.sum_5_7) == p[1] + p[3]);
  sys = sys && (S(3, p[1]) == p[2]) && (S(3, p[3]) == p[4]);
  sys = sys && (S(3, sol.sum_5_7) == p[6] + p[8]);
  sys = sys && (S(2, p[2]) == p[1] + p[3]);
  sys = sys && (S(2, p[6]) == p[4] + p[8] + sol.sum_5_7);
  sys = sys && (S(1, p[4]) == p[6] + p[8]);
  sys = sys && (S(1, p[3]) == p[1] + p[2] + sol.sum_5_7);
  rep.push_back(CheckReport::exact("system-consistency", "size-three-system", pstr, sys));

  {
    RationalFn total = p[1] + p[2] + p[3] + p[4] + p[6] + p[8] + sol.sum_5_7;
    rep.push_back(CheckReport::exact("sum-equals-normalization", "normalization-product", pstr,
                                     total == RationalFn(normalization(c))));
  }
  {
    // the all-openings component carries the full k-product factor
    Poly num = p[1].as_polynomial();
    bool ok = true;
    auto zvar = [&](int i) { return i == 0 ? c.zeta0 : c.z[static_cast<size_t>(i)]; };
    for (int i = 0; i <= 3 && ok; ++i)
      for (int j = i + 1; j <= 3 && ok; ++j) {
        auto quo = num.try_divide(k_poly(zvar(j), zvar(i)));
        ok = quo.has_value();
        if (ok) num = *quo;
      }
    rep.push_back(CheckReport::exact("open-component-k-factor", "size-three-system", pstr, ok));
  }
  {
    // generic b: the derivation chain determines psi_4 and psi_8 from psi_1
    // (at b = 1 the division by b - 1 degenerates and only component sums
    // survive). The chain relations are verified as stated.
    auto solb = solve_symbolic_L3(true);
    RationalFn b = RationalFn::variable(solb.b_var);
    bool chain = true;
    chain = chain && (solb.psi[2] == s_op(solb.ctx, 3, solb.psi[1]));
    chain = chain && (solb.psi[3] == s_op(solb.ctx, 2, solb.psi[2]) - solb.psi[1]);
    chain = chain && (b * solb.psi[4] == s_op(solb.ctx, 3, solb.psi[3]));
    RationalFn s1p4 = s_op(solb.ctx, 1, solb.psi[4]);
    chain = chain && ((b - RationalFn::one()) * solb.psi[8] ==
                      s_op(solb.ctx, 3, s_op(solb.ctx, 2, s1p4)) - s1p4 + solb.psi[4]);
    rep.push_back(
        CheckReport::exact("generic-b-chain-relations", "size-three-system", "L=3 generic b", chain));
    // b -> 1 limits: the individually determined components match, and the
    // undetermined pairs match as sums
    bool limit = true;
    auto at_b1 = [&](const RationalFn& f) {
      Poly den = f.den.eval_var(solb.b_var, Cyclo::one());
      if (den.is_zero()) throw std::domain_error("b -> 1 limit not finite");
      return RationalFn(f.num.eval_var(solb.b_var, Cyclo::one()), den);
    };
    for (int a : {1, 2, 3, 4}) limit = limit && (at_b1(solb.psi[static_cast<size_t>(a)]) ==
                                                 sol.psi[static_cast<size_t>(a)]);
    limit = limit && (at_b1(solb.psi[5] + solb.psi[7]) == sol.sum_5_7);
    limit = limit && (at_b1(solb.psi[6] + solb.psi[8]) == sol.psi[6] + sol.psi[8]);
    rep.push_back(
        CheckReport::exact("generic-b-chain-limit", "size-three-system", "L=3 generic b", limit));
  }
  {
    // numeric solve oracle on the orbit of a random point: the pointwise
    // exchange system has a one-dimensional solution space at b = 1 (matching
    // the symbolic solution) and an empty one at generic b, which is the
    // obstruction behind the undetermined middle components
    int n1 = qkz_orbit_nullity(3, 1.0, seed);
    int ng = qkz_orbit_nullity(3, 1.618033, seed);
    rep.push_back(CheckReport::exact("pointwise-system-solvable-only-at-unit-b",
                                     "size-three-system", "L=3 orbit oracle",
                                     n1 == 1 && ng == 0));
  }
  (void)rng;
  return rep;
}

int qkz_orbit_nullity(int L, double b, uint64_t seed) {
  using CD = std::complex<double>;
  Rng rng(seed);
  int dim = 1 << L;
  const CD q = Cyclo::q().to_complex();
  std::vector<CD> z0;
  for (int i = 0; i < L; ++i) z0.push_back(rng.unit_point());
  CD zeta0 = rng.unit_point(), zetaL = rng.unit_point();
  // orbit under site swaps and inversions: signed permutations
  std::vector<std::vector<CD>> orbit;
  std::vector<int> perm(static_cast<size_t>(L));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end());
  do {
    for (int mask = 0; mask < (1 << L); ++mask) {
      std::vector<CD> p(static_cast<size_t>(L));
      for (int i = 0; i < L; ++i) {
        CD v = z0[static_cast<size_t>(perm[static_cast<size_t>(i)])];
        if (mask & (1 << i)) v = CD(1) / v;
        p[static_cast<size_t>(i)] = v;
      }
      orbit.push_back(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto find_pt = [&](const std::vector<CD>& p) {
    for (size_t t = 0; t < orbit.size(); ++t) {
      double d = 0;
      for (int i = 0; i < L; ++i) d += std::abs(orbit[t][static_cast<size_t>(i)] - p[static_cast<size_t>(i)]);
      if (d < 1e-11) return static_cast<int>(t);
    }
    throw std::logic_error("qkz_orbit_nullity: orbit not closed");
  };
  int N = static_cast<int>(orbit.size());
  auto params = AlgebraParams<CD>::from_weights(CD(1), CD(1), CD(1), CD(b));
  std::vector<Matrix<CD>> E;
  for (int k = 0; k <= L; ++k) E.push_back(tl::generator_matrix(k, L, params));
  auto brk = [](CD x) { return x - CD(1) / x; };
  auto kf = [&](CD a, CD zz) { return brk(a / (q * zz)) * brk(a * zz / q); };
  Eigen::MatrixXcd A(static_cast<long>(N) * (L + 1) * dim, static_cast<long>(N) * dim);
  A.setZero();
  long row = 0;
  for (int t = 0; t < N; ++t) {
    auto& zp = orbit[static_cast<size_t>(t)];
    for (int i = 0; i <= L; ++i) {
      std::vector<CD> zi = zp;
      CD g, gi;
      int sgn = +1;
      if (i >= 1 && i <= L - 1) {
        std::swap(zi[static_cast<size_t>(i - 1)], zi[static_cast<size_t>(i)]);
        g = brk(zp[static_cast<size_t>(i - 1)] / (q * zp[static_cast<size_t>(i)])) /
            brk(zp[static_cast<size_t>(i - 1)] / zp[static_cast<size_t>(i)]);
        gi = brk(zi[static_cast<size_t>(i - 1)] / (q * zi[static_cast<size_t>(i)])) /
             brk(zi[static_cast<size_t>(i - 1)] / zi[static_cast<size_t>(i)]);
      } else if (i == 0) {
        zi[0] = CD(1) / zp[0];
        g = kf(CD(1) / zp[0], zeta0) / (brk(q) * brk(zp[0] * zp[0]));
        gi = kf(CD(1) / zi[0], zeta0) / (brk(q) * brk(zi[0] * zi[0]));
      } else {
        zi[static_cast<size_t>(L - 1)] = CD(1) / zp[static_cast<size_t>(L - 1)];
        g = kf(zp[static_cast<size_t>(L - 1)], zetaL) / (brk(q) * brk(zp[static_cast<size_t>(L - 1)] * zp[static_cast<size_t>(L - 1)]));
        gi = kf(zi[static_cast<size_t>(L - 1)], zetaL) / (brk(q) * brk(zi[static_cast<size_t>(L - 1)] * zi[static_cast<size_t>(L - 1)]));
        sgn = -1;
      }
      int ti = find_pt(zi);
      for (int beta = 0; beta < dim; ++beta, ++row) {
        for (int alpha = 0; alpha < dim; ++alpha)
          if (std::abs(E[static_cast<size_t>(i)](beta, alpha)) > 1e-14)
            A(row, static_cast<long>(t) * dim + alpha) += E[static_cast<size_t>(i)](beta, alpha);
        A(row, static_cast<long>(t) * dim + beta) += CD(sgn) * g;
        A(row, static_cast<long>(ti) * dim + beta) += CD(sgn) * gi;
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  auto sv = svd.singularValues();
  int nullity = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) < 1e-8 * sv(0)) ++nullity;
  return nullity;
}

Report positivity_check(int L, uint64_t seed) {
  Report rep;
  Rng rng(seed);
  TransferPoint<CNum> pt;
  pt.w = rng.unit_point();
  pt.zs.assign(static_cast<size_t>(L), CNum(1));
  pt.zeta0 = pt.zetaL = CNum(1);
  auto g = solve_numeric(pt, Anchor::ExtremalOpen);
  bool ok = true;
  for (auto& v : g.psi) ok = ok && v.real() > 1e-12 && std::abs(v.imag()) < 1e-8;
  rep.push_back(CheckReport::exact("homogeneous-components-positive", "perron-frobenius",
                                   "L=" + std::to_string(L), ok));
  return rep;
}

}  // namespace tbloop::gs

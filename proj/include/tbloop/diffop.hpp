// Differential operators in one variable, built from the derivation
// D_z = z d/dz: finite sums sum_k c_k(z) D_z^k with rational-function
// coefficients. Composition uses the Leibniz rule for the derivation.

#pragma once

#include <vector>

#include "tbloop/ratfn.hpp"

namespace tbloop {

class DiffOp1 {
 public:
  VarId v;
  // coeffs[k] multiplies D_v^k
  std::vector<RationalFn> coeffs;

  explicit DiffOp1(VarId var) : v(var), coeffs{RationalFn::zero()} {}
  DiffOp1(VarId var, std::vector<RationalFn> c) : v(var), coeffs(std::move(c)) { trim(); }

  static DiffOp1 identity(VarId var) {
    return DiffOp1(var, {RationalFn::one()});
  }
  static DiffOp1 derivation(VarId var) {
    return DiffOp1(var, {RationalFn::zero(), RationalFn::one()});
  }
  static DiffOp1 multiplication(VarId var, const RationalFn& f) {
    return DiffOp1(var, {f});
  }

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  static RationalFn d_apply(VarId v, const RationalFn& f) {
    Poly dn = f.num.dlog_derivative(v), dd = f.den.dlog_derivative(v);
    return RationalFn(dn * f.den - f.num * dd, f.den * f.den);
  }

  RationalFn apply(const RationalFn& f) const {
    RationalFn r = RationalFn::zero();
    RationalFn dk = f;
    for (size_t k = 0; k < coeffs.size(); ++k) {
      if (!coeffs[k].is_zero()) r += coeffs[k] * dk;
      if (k + 1 < coeffs.size()) dk = d_apply(v, dk);
    }
    return r;
  }

  Poly apply_poly(const Poly& f) const {
    RationalFn r = apply(RationalFn(f));
    return r.as_polynomial();
  }

  friend DiffOp1 operator+(const DiffOp1& a, const DiffOp1& b) {
    DiffOp1 r(a.v);
    r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), RationalFn::zero());
    for (size_t k = 0; k < a.coeffs.size(); ++k) r.coeffs[k] += a.coeffs[k];
    for (size_t k = 0; k < b.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
    r.trim();
    return r;
  }
  friend DiffOp1 operator-(const DiffOp1& a, const DiffOp1& b) {
    DiffOp1 r(a.v);
    r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), RationalFn::zero());
    for (size_t k = 0; k < a.coeffs.size(); ++k) r.coeffs[k] += a.coeffs[k];
    for (size_t k = 0; k < b.coeffs.size(); ++k) r.coeffs[k] -= b.coeffs[k];
    r.trim();
    return r;
  }
  friend DiffOp1 operator*(const RationalFn& c, const DiffOp1& a) {
    DiffOp1 r = a;
    for (auto& ck : r.coeffs) ck *= c;
    r.trim();
    return r;
  }

  // Operator composition (*this after b): D^j (b_k g) expands by Leibniz.
  DiffOp1 compose(const DiffOp1& b) const {
    DiffOp1 r(v);
    r.coeffs.assign(coeffs.size() + b.coeffs.size() - 1, RationalFn::zero());
    for (size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j].is_zero()) continue;
      for (size_t k = 0; k < b.coeffs.size(); ++k) {
        if (b.coeffs[k].is_zero()) continue;
        // D^j (b_k D^k f) = sum_m binom(j,m) D^m(b_k) D^{j-m+k} f
        RationalFn dm = b.coeffs[k];
        Rat binom(1);
        for (size_t m = 0; m <= j; ++m) {
          if (m > 0) {
            dm = d_apply(v, dm);
            binom = binom * Rat(static_cast<long>(j - m + 1)) / Rat(static_cast<long>(m));
          }
          size_t idx = j - m + k;
          if (r.coeffs.size() <= idx) r.coeffs.resize(idx + 1, RationalFn::zero());
          r.coeffs[idx] += coeffs[j] * RationalFn(Cyclo(binom)) * dm;
        }
      }
    }
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  }
};

inline RationalFn dz_apply(const DiffOp1& op, const RationalFn& f) { return op.apply(f); }

}  // namespace tbloop

// Normalized quotients of Laurent polynomials. Equality is decided by
// cross-multiplication; the canonical form divides out monomial content and
// fixes the sign so that the lex-largest numerator term has its first nonzero
// basis rational positive.

#pragma once

#include <optional>
#include <stdexcept>

#include "tbloop/laurent.hpp"

namespace tbloop {

class RationalFn {
 public:
  Poly num, den;

  RationalFn() : num(Poly::zero()), den(Poly::one()) {}
  RationalFn(const Poly& n) : num(n), den(Poly::one()) { canonicalize(); }
  RationalFn(const Poly& n, const Poly& d) : num(n), den(d) {
    if (den.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    canonicalize();
  }
  RationalFn(long n) : RationalFn(Poly(n)) {}
  explicit RationalFn(const Cyclo& c) : RationalFn(Poly(c)) {}

  static RationalFn zero() { return RationalFn(); }
  static RationalFn one() { return RationalFn(Poly::one()); }
  static RationalFn variable(VarId v, int exp = 1) { return RationalFn(Poly::variable(v, exp)); }

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return den.is_constant(); }

  Poly as_polynomial() const {
    if (!den.is_constant()) {
      auto q = num.try_divide(den);
      if (q) return *q;
      throw std::domain_error("RationalFn: not a polynomial");
    }
    return num * den.constant_value().inverse();
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den == b.den) return RationalFn(a.num + b.num, a.den);
    return RationalFn(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    if (a.den == b.den) return RationalFn(a.num - b.num, a.den);
    return RationalFn(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RationalFn operator-(const RationalFn& a) {
    RationalFn r = a;
    r.num = -r.num;
    return r;
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num * b.num, a.den * b.den);
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("RationalFn: division by zero");
    return RationalFn(a.num * b.den, a.den * b.num);
  }
  RationalFn& operator+=(const RationalFn& b) { *this = *this + b; return *this; }
  RationalFn& operator-=(const RationalFn& b) { *this = *this - b; return *this; }
  RationalFn& operator*=(const RationalFn& b) { *this = *this * b; return *this; }
  RationalFn& operator/=(const RationalFn& b) { *this = *this / b; return *this; }

  RationalFn inverse() const {
    if (is_zero()) throw std::domain_error("RationalFn: inverse of zero");
    return RationalFn(den, num);
  }
  RationalFn pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFn r = one(), base = *this;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  RationalFn substitute_monomial(VarId v, const Cyclo& coef, VarId w, int e) const {
    return RationalFn(num.substitute_monomial(v, coef, w, e), den.substitute_monomial(v, coef, w, e));
  }
  RationalFn eval_var(VarId v, const Cyclo& value) const {
    Poly d = den.eval_var(v, value);
    if (d.is_zero()) throw std::domain_error("RationalFn: pole at substituted value");
    return RationalFn(num.eval_var(v, value), d);
  }
  Cyclo eval(const std::map<VarId, Cyclo>& point) const {
    Cyclo d = den.eval(point);
    if (d.is_zero()) throw std::domain_error("RationalFn: pole at evaluation point");
    return num.eval(point) / d;
  }
  std::complex<double> eval_complex(const std::map<VarId, std::complex<double>>& point) const {
    return num.eval_complex(point) / den.eval_complex(point);
  }

  // Try to cancel the denominator into the numerator; also trims rational
  // content. Quietly keeps the quotient form when no exact division is found.
  RationalFn& simplify(size_t max_steps = 50000) {
    if (!den.is_constant()) {
      auto q = num.try_divide(den, max_steps);
      if (q) {
        num = *q;
        den = Poly::one();
        canonicalize();
      }
    }
    return *this;
  }

 private:
  void canonicalize() {
    if (num.is_zero()) {
      den = Poly::one();
      return;
    }
    // a single-term denominator is an invertible Laurent monomial: fold it in
    if (den.term_count() == 1) {
      auto [dm, dc] = den.leading_term();
      num = num.shift_by(dm.inverse()) * dc.inverse();
      den = Poly::one();
    } else {
      // strip the common monomial content
      Monomial gn = num.monomial_content(), gd = den.monomial_content();
      Monomial common;
      {
        size_t i = 0, j = 0;
        while (i < gn.e.size() && j < gd.e.size()) {
          if (gn.e[i].first < gd.e[j].first)
            ++i;
          else if (gd.e[j].first < gn.e[i].first)
            ++j;
          else {
            int k = std::min(gn.e[i].second, gd.e[j].second);
            if (k != 0) common.e.push_back({gn.e[i].first, k});
            ++i;
            ++j;
          }
        }
      }
      if (!common.is_unit()) {
        num = num.shift_by(common.inverse());
        den = den.shift_by(common.inverse());
      }
    }
    // sign convention on the lex-largest numerator coefficient
    auto [m, c] = num.leading_term();
    int sign = 0;
    for (int k = 0; k < 4 && sign == 0; ++k) sign = cmp(c.c[k], 0);
    if (sign < 0) {
      num = -num;
      den = -den;
    }
  }
};

}  // namespace tbloop

// Formal integral primitives: the principal-value-style integral over the
// domain P, int_P dt/t sum c_m t^m = sum c_m / m (requires c_0 = 0), and the
// elementary definite integral int_a^b dy/y y^m = (b^m - a^m)/m with symbolic
// endpoints.

#pragma once

#include "tbloop/errors.hpp"
#include "tbloop/laurent.hpp"

namespace tbloop {

// Eliminates t from f: every monomial c t^m (c free of t) maps to c/m.
inline Poly formal_P_integral(const Poly& f, VarId t) {
  Poly r;
  for (auto& [m, c] : f.terms) {
    int k = m.exponent(t);
    if (k == 0)
      throw NonzeroConstantTerm("formal_P_integral: coefficient of " + VarPool::name(t) +
                                "^0 is nonzero");
    r.add_term(m / Monomial::single(t, k), c * Cyclo(make_rat(1, k)));
  }
  return r;
}

// Endpoint power b^m for integer m; negative powers require the endpoint to be
// a single (invertible) term.
inline Poly endpoint_power(const Poly& b, int m) {
  if (m >= 0) return b.pow(m);
  if (b.term_count() != 1)
    throw ZeroExponent("definite_log_integral: negative power of a non-monomial endpoint");
  auto [mono, c] = b.leading_term();
  return Poly::monomial(mono.inverse(), c.inverse()).pow(-m);
}

// int_a^b dy/y f(y), term-by-term on monomials in y. f must have no y^0 term.
inline Poly definite_log_integral(const Poly& f, VarId y, const Poly& a, const Poly& b) {
  auto by_exp = f.coefficients_in(y);
  Poly r;
  std::map<int, Poly> diff_cache;
  for (auto& [m, coef] : by_exp) {
    if (m == 0) {
      if (!coef.is_zero())
        throw ZeroExponent("definite_log_integral: " + VarPool::name(y) +
                           "^0 term present (would produce a logarithm)");
      continue;
    }
    auto it = diff_cache.find(m);
    if (it == diff_cache.end()) {
      Poly d = (endpoint_power(b, m) - endpoint_power(a, m)) * Cyclo(make_rat(1, m));
      it = diff_cache.emplace(m, d).first;
    }
    r += coef * it->second;
  }
  return r;
}

}  // namespace tbloop

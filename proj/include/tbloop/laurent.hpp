// Sparse multivariate Laurent polynomials over the cyclotomic field.
// Exponent vectors are sparse maps keyed by interned variable names; terms
// with zero coefficient are never stored. Supports exact substitution,
// the derivation D_x = x d/dx, and exact (attempted) division.

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tbloop/cyclo.hpp"

namespace tbloop {

using VarId = int;

class VarPool {
 public:
  static VarId id(const std::string& name) {
    auto& self = instance();
    std::lock_guard<std::mutex> lock(self.mu_);
    auto it = self.by_name_.find(name);
    if (it != self.by_name_.end()) return it->second;
    VarId v = static_cast<VarId>(self.names_.size());
    self.names_.push_back(name);
    self.by_name_.emplace(name, v);
    return v;
  }
  static const std::string& name(VarId v) {
    auto& self = instance();
    std::lock_guard<std::mutex> lock(self.mu_);
    return self.names_.at(static_cast<size_t>(v));
  }

 private:
  static VarPool& instance() {
    static VarPool pool;
    return pool;
  }
  std::mutex mu_;
  std::vector<std::string> names_;
  std::map<std::string, VarId> by_name_;
};

inline VarId var(const std::string& name) { return VarPool::id(name); }

// Sorted sparse exponent vector; entries have nonzero exponent.
struct Monomial {
  std::vector<std::pair<VarId, int>> e;

  static Monomial unit() { return {}; }
  static Monomial single(VarId v, int exp) {
    Monomial m;
    if (exp != 0) m.e.push_back({v, exp});
    return m;
  }

  int exponent(VarId v) const {
    for (auto& [w, k] : e)
      if (w == v) return k;
    return 0;
  }
  bool is_unit() const { return e.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.e.size() || j < b.e.size()) {
      if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
        r.e.push_back(a.e[i++]);
      } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
        r.e.push_back(b.e[j++]);
      } else {
        int k = a.e[i].second + b.e[j].second;
        if (k != 0) r.e.push_back({a.e[i].first, k});
        ++i;
        ++j;
      }
    }
    return r;
  }
  Monomial inverse() const {
    Monomial r = *this;
    for (auto& [v, k] : r.e) k = -k;
    return r;
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }

  // Lexicographic order on the merged dense exponent vectors (var ids ascending,
  // missing exponents read as 0). Compatible with multiplication.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.e.size() || j < b.e.size()) {
      VarId va = i < a.e.size() ? a.e[i].first : std::numeric_limits<VarId>::max();
      VarId vb = j < b.e.size() ? b.e[j].first : std::numeric_limits<VarId>::max();
      if (va == vb) {
        if (a.e[i].second != b.e[j].second) return a.e[i].second < b.e[j].second;
        ++i;
        ++j;
      } else if (va < vb) {
        // a has an exponent where b has 0
        if (a.e[i].second != 0) return a.e[i].second < 0;
        ++i;
      } else {
        if (b.e[j].second != 0) return b.e[j].second > 0;
        ++j;
      }
    }
    return false;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

class Poly {
 public:
  std::map<Monomial, Cyclo> terms;

  Poly() = default;
  explicit Poly(const Cyclo& c) {
    if (!c.is_zero()) terms.emplace(Monomial::unit(), c);
  }
  Poly(long n) : Poly(Cyclo(n)) {}

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Cyclo::one()); }
  static Poly variable(VarId v, int exp = 1) {
    Poly p;
    p.terms.emplace(Monomial::single(v, exp), Cyclo::one());
    return p;
  }
  static Poly monomial(const Monomial& m, const Cyclo& c) {
    Poly p;
    if (!c.is_zero()) p.terms.emplace(m, c);
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_unit());
  }
  Cyclo constant_value() const {
    if (terms.empty()) return Cyclo::zero();
    if (!is_constant()) throw std::domain_error("Poly: not a constant");
    return terms.begin()->second;
  }
  size_t term_count() const { return terms.size(); }

  void add_term(const Monomial& m, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r;
    for (auto& [m, c] : a.terms) r.terms.emplace(m, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms)
      for (auto& [mb, cb] : b.terms) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend Poly operator*(const Poly& a, const Cyclo& c) {
    Poly r;
    if (c.is_zero()) return r;
    for (auto& [m, ca] : a.terms) r.terms.emplace(m, ca * c);
    return r;
  }
  friend Poly operator*(const Cyclo& c, const Poly& a) { return a * c; }
  Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
  Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
  Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }
  Poly& operator*=(const Cyclo& c) { *this = *this * c; return *this; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(long n) const {
    if (n < 0) throw std::domain_error("Poly: negative power (use RationalFn)");
    Poly r = one(), base = *this;
    while (n) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  std::set<VarId> variables() const {
    std::set<VarId> vs;
    for (auto& [m, c] : terms)
      for (auto& [v, k] : m.e) vs.insert(v);
    return vs;
  }
  bool depends_on(VarId v) const {
    for (auto& [m, c] : terms)
      if (m.exponent(v) != 0) return true;
    return false;
  }
  int min_degree(VarId v) const {
    int d = 0;
    bool first = true;
    for (auto& [m, c] : terms) {
      int k = m.exponent(v);
      d = first ? k : std::min(d, k);
      first = false;
    }
    return d;
  }
  int max_degree(VarId v) const {
    int d = 0;
    bool first = true;
    for (auto& [m, c] : terms) {
      int k = m.exponent(v);
      d = first ? k : std::max(d, k);
      first = false;
    }
    return d;
  }

  // General substitution var -> value (any polynomial; negative exponents of v
  // require inv to be supplied, as value^{-1}).
  Poly substitute(VarId v, const Poly& value, const Poly* inv = nullptr) const {
    Poly r;
    std::map<int, Poly> pow_cache;
    for (auto& [m, c] : terms) {
      int k = m.exponent(v);
      Monomial rest = m / Monomial::single(v, k);
      if (k == 0) {
        r.add_term(rest, c);
        continue;
      }
      auto it = pow_cache.find(k);
      if (it == pow_cache.end()) {
        Poly pk;
        if (k > 0)
          pk = value.pow(k);
        else {
          if (!inv) throw std::domain_error("Poly::substitute: negative exponent needs inverse");
          pk = inv->pow(-k);
        }
        it = pow_cache.emplace(k, pk).first;
      }
      for (auto& [m2, c2] : it->second.terms) r.add_term(rest * m2, c * c2);
    }
    return r;
  }

  // Substitute v -> c * w^e (monomial image; exact for all integer exponents).
  Poly substitute_monomial(VarId v, const Cyclo& coef, VarId w, int e) const {
    Poly r;
    for (auto& [m, c] : terms) {
      int k = m.exponent(v);
      if (k == 0) {
        r.add_term(m, c);
        continue;
      }
      Monomial rest = m / Monomial::single(v, k);
      Monomial img = rest * Monomial::single(w, e * k);
      r.add_term(img, c * coef.pow(k));
    }
    return r;
  }

  // Simultaneous variable renaming (collision-free single pass).
  Poly rename(const std::map<VarId, VarId>& names) const {
    Poly r;
    for (auto& [m, c] : terms) {
      Monomial nm;
      std::vector<std::pair<VarId, int>> e;
      for (auto& [v, k] : m.e) {
        auto it = names.find(v);
        e.push_back({it == names.end() ? v : it->second, k});
      }
      std::sort(e.begin(), e.end());
      for (size_t i = 0; i < e.size(); ++i) {
        if (!nm.e.empty() && nm.e.back().first == e[i].first)
          nm.e.back().second += e[i].second;
        else
          nm.e.push_back(e[i]);
      }
      nm.e.erase(std::remove_if(nm.e.begin(), nm.e.end(), [](auto& p) { return p.second == 0; }),
                 nm.e.end());
      r.add_term(nm, c);
    }
    return r;
  }

  // Substitute v -> constant value (exact; value must be invertible if negative
  // exponents occur).
  Poly eval_var(VarId v, const Cyclo& value) const {
    Poly r;
    std::map<int, Cyclo> pow_cache;
    for (auto& [m, c] : terms) {
      int k = m.exponent(v);
      if (k == 0) {
        r.add_term(m, c);
        continue;
      }
      auto it = pow_cache.find(k);
      if (it == pow_cache.end()) it = pow_cache.emplace(k, value.pow(k)).first;
      r.add_term(m / Monomial::single(v, k), c * it->second);
    }
    return r;
  }

  Cyclo eval(const std::map<VarId, Cyclo>& point) const {
    Cyclo r = Cyclo::zero();
    for (auto& [m, c] : terms) {
      Cyclo t = c;
      for (auto& [v, k] : m.e) {
        auto it = point.find(v);
        if (it == point.end()) throw std::domain_error("Poly::eval: missing variable " + VarPool::name(v));
        t *= it->second.pow(k);
      }
      r += t;
    }
    return r;
  }

  std::complex<double> eval_complex(const std::map<VarId, std::complex<double>>& point) const {
    std::complex<double> r(0, 0);
    for (auto& [m, c] : terms) {
      std::complex<double> t = c.to_complex();
      for (auto& [v, k] : m.e) {
        auto it = point.find(v);
        if (it == point.end()) throw std::domain_error("Poly::eval_complex: missing variable " + VarPool::name(v));
        t *= std::pow(it->second, k);
      }
      r += t;
    }
    return r;
  }

  // D_v = v d/dv acting term-by-term: D_v(v^m) = m v^m.
  Poly dlog_derivative(VarId v) const {
    Poly r;
    for (auto& [m, c] : terms) {
      int k = m.exponent(v);
      if (k != 0) r.terms.emplace(m, c * Cyclo(Rat(k)));
    }
    return r;
  }

  // View as dense-in-one-variable: exponent of v -> coefficient poly (v removed).
  std::map<int, Poly> coefficients_in(VarId v) const {
    std::map<int, Poly> r;
    for (auto& [m, c] : terms) {
      int k = m.exponent(v);
      r[k].add_term(m / Monomial::single(v, k), c);
    }
    return r;
  }

  // Leading (lex-largest) term.
  std::pair<Monomial, Cyclo> leading_term() const {
    if (terms.empty()) throw std::domain_error("Poly: leading term of zero");
    auto it = std::prev(terms.end());
    return {it->first, it->second};
  }

  // Attempt exact division: returns f/d when the division terminates with zero
  // remainder, nullopt otherwise. Terminates whenever d divides *this.
  std::optional<Poly> try_divide(const Poly& d, size_t max_steps = 2000000) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly rem = *this, quot;
    auto [dm, dc] = d.leading_term();
    Cyclo dci = dc.inverse();
    size_t steps = 0;
    while (!rem.is_zero()) {
      if (++steps > max_steps) return std::nullopt;
      auto [rm, rc] = rem.leading_term();
      Monomial qm = rm / dm;
      Cyclo qc = rc * dci;
      quot.add_term(qm, qc);
      for (auto& [m, c] : d.terms) rem.add_term(qm * m, -(qc * c));
    }
    return quot;
  }

  bool divisible_by(const Poly& d, size_t max_steps = 2000000) const {
    return try_divide(d, max_steps).has_value();
  }

  // Greatest common monomial divisor, for canonical forms.
  Monomial monomial_content() const {
    if (terms.empty()) return Monomial::unit();
    Monomial g;
    for (VarId v : variables()) {
      int lo = min_degree(v);
      if (lo != 0) g = g * Monomial::single(v, lo);
    }
    return g;
  }

  Poly shift_by(const Monomial& m) const {
    Poly r;
    for (auto& [mm, c] : terms) r.terms.emplace(mm * m, c);
    return r;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (!s.empty()) s += "  +  ";
      s += "(" + it->second.str() + ")";
      for (auto& [v, k] : it->first.e) {
        s += " " + VarPool::name(v);
        if (k != 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }
};

// z - 1/z as a polynomial in one variable, and the k-weight builders used
// throughout: k(a, b) = [a/(q b)] [a b/q] at the combinatorial point.
inline Poly bracket_poly(const Poly& u, const Poly& u_inv) { return u - u_inv; }

}  // namespace tbloop

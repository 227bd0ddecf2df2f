// Symplectic characters chi_lambda = a_mu / a_delta and the family of
// auxiliary polynomials around them: the Weyl denominator product form, the
// truncated determinants a^{(k)}_mu, the single-variable polynomials phi_mu,
// phi_delta and q_lambda, staircase weights, and the character recursion under
// z_j -> q z_i.
//
// chi is computed once per (lambda, L) as an exact Laurent quotient and
// cached; every evaluation, including at coincident or unit arguments, goes
// through the cached polynomial, so the 0/0 determinant ratio never occurs.

#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "tbloop/errors.hpp"
#include "tbloop/ratfn.hpp"
#include "tbloop/spectral.hpp"

namespace tbloop::sym {

struct Partition {
  std::vector<long> parts;  // weakly decreasing, nonnegative

  Partition() = default;
  explicit Partition(std::vector<long> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 0 || (i + 1 < parts.size() && parts[i] < parts[i + 1]))
        throw std::invalid_argument("Partition: parts must be weakly decreasing and nonnegative");
    }
  }
  size_t size() const { return parts.size(); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  }
};

// lambda^{(L)}_j = floor((L-j)/2)
inline Partition staircase(int L) {
  std::vector<long> p(static_cast<size_t>(L));
  for (int j = 1; j <= L; ++j) p[static_cast<size_t>(j - 1)] = (L - j) / 2;
  return Partition(std::move(p));
}

// mu = lambda + delta, delta = (L, L-1, ..., 1); strictly decreasing positive.
inline std::vector<long> shifted_weight(const Partition& lam) {
  long L = static_cast<long>(lam.size());
  std::vector<long> mu(lam.parts);
  for (long i = 0; i < L; ++i) mu[static_cast<size_t>(i)] += L - i;
  return mu;
}

// a_mu(x_1..x_L) = det[x_i^{mu_j} - x_i^{-mu_j}]
inline Poly a_mu_det(const std::vector<long>& mu, const std::vector<VarId>& xs) {
  size_t L = mu.size();
  if (xs.size() != L) throw std::invalid_argument("a_mu_det: arity mismatch");
  // permutation expansion; fine for L <= 7
  std::vector<size_t> perm(L);
  std::iota(perm.begin(), perm.end(), 0);
  Poly det;
  int sign;
  auto parity = [](const std::vector<size_t>& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      size_t len = 0, j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = p[j];
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  };
  do {
    sign = parity(perm);
    Poly term{Cyclo(Rat(sign))};
    for (size_t i = 0; i < L; ++i) {
      int e = static_cast<int>(mu[perm[i]]);
      term *= Poly::variable(xs[i], e) - Poly::variable(xs[i], -e);
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

inline std::vector<long> delta_weight(int L) {
  std::vector<long> d(static_cast<size_t>(L));
  for (int i = 0; i < L; ++i) d[static_cast<size_t>(i)] = L - i;
  return d;
}

// Weyl denominator in product form:
// prod x_i^{i-L} prod_{i<j}(x_i - x_j) prod_{i<=j}(x_i - 1/x_j)
inline Poly a_delta_product(const std::vector<VarId>& xs) {
  int L = static_cast<int>(xs.size());
  Poly r = Poly::one();
  Monomial pre;
  for (int i = 1; i <= L; ++i)
    if (i - L != 0) pre = pre * Monomial::single(xs[static_cast<size_t>(i - 1)], i - L);
  r = r.shift_by(pre);
  for (int i = 0; i < L; ++i)
    for (int j = i; j < L; ++j) {
      if (i < j) r *= Poly::variable(xs[static_cast<size_t>(i)]) - Poly::variable(xs[static_cast<size_t>(j)]);
      r *= Poly::variable(xs[static_cast<size_t>(i)]) - Poly::variable(xs[static_cast<size_t>(j)], -1);
    }
  return r;
}

// a^{(1)}_mu = prod mu_i prod_{i<j} (mu_i^2 - mu_j^2)
inline Rat a1_mu(const std::vector<long>& mu) {
  Rat r(1);
  for (size_t i = 0; i < mu.size(); ++i) {
    r *= Rat(mu[i]);
    for (size_t j = i + 1; j < mu.size(); ++j) r *= Rat(mu[i] * mu[i] - mu[j] * mu[j]);
  }
  return r;
}

// Truncated antisymmetrised determinant a^{(k)}_mu(x_1..x_{k-1}): rows below k
// are the integer rows mu_j^{2(L-i)+1}.
inline Poly a_trunc(int k, const std::vector<long>& mu, const std::vector<VarId>& xs) {
  int L = static_cast<int>(mu.size());
  if (k < 1 || k > L) throw std::invalid_argument("a_trunc: k out of range");
  if (static_cast<int>(xs.size()) != k - 1) throw std::invalid_argument("a_trunc: arity mismatch");
  std::vector<size_t> perm(static_cast<size_t>(L));
  std::iota(perm.begin(), perm.end(), 0);
  auto parity = [](const std::vector<size_t>& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      size_t len = 0, j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = p[j];
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  };
  Poly det;
  do {
    Poly term{Cyclo(Rat(parity(perm)))};
    bool zero = false;
    for (int i = 0; i < L && !zero; ++i) {
      long m = mu[perm[static_cast<size_t>(i)]];
      if (i < k - 1) {
        int e = static_cast<int>(m);
        term *= Poly::variable(xs[static_cast<size_t>(i)], e) - Poly::variable(xs[static_cast<size_t>(i)], -e);
      } else {
        // integer entry mu_j^{2(L-i)+1}, i counted 1-based in the formula
        long expo = 2 * static_cast<long>(L - (i + 1)) + 1;
        Rat val(1);
        for (long t = 0; t < expo; ++t) val *= Rat(m);
        term *= Cyclo(val);
      }
    }
    if (!zero) det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Weyl dimension formula: chi_lambda(1,...,1) = prod mu_i/(2i-1)! prod (mu_i^2-mu_j^2)
inline Rat chi_at_ones(const Partition& lam) {
  auto mu = shifted_weight(lam);
  Rat r(1);
  Rat fact(1);
  for (size_t i = 0; i < mu.size(); ++i) {
    long ii = static_cast<long>(i) + 1;
    if (i > 0)
      for (long t = 2 * ii - 2; t <= 2 * ii - 1; ++t) fact *= Rat(t);
    r *= Rat(mu[i]) / fact;
    for (size_t j = i + 1; j < mu.size(); ++j) r *= Rat(mu[i] * mu[i] - mu[j] * mu[j]);
  }
  return r;
}

namespace detail {
inline std::vector<VarId> canonical_vars(int L) {
  std::vector<VarId> xs;
  for (int i = 1; i <= L; ++i) xs.push_back(var("_x" + std::to_string(i)));
  return xs;
}

class ChiCache {
 public:
  static const Poly& get(const Partition& lam) {
    auto& self = instance();
    std::lock_guard<std::mutex> lock(self.mu_);
    auto it = self.cache_.find(lam);
    if (it != self.cache_.end()) return it->second;
    Poly chi = compute(lam);
    return self.cache_.emplace(lam, std::move(chi)).first->second;
  }

 private:
  static Poly compute(const Partition& lam) {
    int L = static_cast<int>(lam.size());
    auto xs = canonical_vars(L);
    Poly num = a_mu_det(shifted_weight(lam), xs);
    // divide by the Weyl denominator factor by factor (all binomials)
    Monomial pre;
    for (int i = 1; i <= L; ++i)
      if (i - L != 0) pre = pre * Monomial::single(xs[static_cast<size_t>(i - 1)], L - i);
    num = num.shift_by(pre);  // divide by prod x_i^{i-L}
    for (int i = 0; i < L; ++i)
      for (int j = i; j < L; ++j) {
        if (i < j) {
          auto q = num.try_divide(Poly::variable(xs[static_cast<size_t>(i)]) -
                                  Poly::variable(xs[static_cast<size_t>(j)]));
          if (!q) throw InexactDivision("chi: Weyl denominator does not divide a_mu");
          num = std::move(*q);
        }
        auto q2 = num.try_divide(Poly::variable(xs[static_cast<size_t>(i)]) -
                                 Poly::variable(xs[static_cast<size_t>(j)], -1));
        if (!q2) throw InexactDivision("chi: Weyl denominator does not divide a_mu");
        num = std::move(*q2);
      }
    return num;
  }

  static ChiCache& instance() {
    static ChiCache c;
    return c;
  }
  std::mutex mu_;
  std::map<Partition, Poly> cache_;
};
}  // namespace detail

// The cached quotient polynomial on canonical variables _x1.._xL.
inline const Poly& chi_poly(const Partition& lam) { return detail::ChiCache::get(lam); }

// chi with each canonical variable replaced by an arbitrary invertible
// argument (value, inverse) pair.
struct PolyArg {
  Poly value, inverse;

  static PolyArg variable(VarId v, int exp = 1) {
    return {Poly::variable(v, exp), Poly::variable(v, -exp)};
  }
  static PolyArg constant(const Cyclo& c) { return {Poly(c), Poly(c.inverse())}; }
  static PolyArg monomial(const Monomial& m, const Cyclo& c) {
    return {Poly::monomial(m, c), Poly::monomial(m.inverse(), c.inverse())};
  }
};

inline Poly chi(const Partition& lam, const std::vector<PolyArg>& args) {
  if (args.size() != lam.size()) throw std::invalid_argument("chi: arity mismatch");
  Poly r = chi_poly(lam);
  auto xs = detail::canonical_vars(static_cast<int>(lam.size()));
  for (size_t i = 0; i < args.size(); ++i)
    r = r.substitute(xs[i], args[i].value, &args[i].inverse);
  return r;
}

inline Cyclo chi_eval(const Partition& lam, const std::vector<Cyclo>& xs) {
  if (xs.size() != lam.size()) throw std::invalid_argument("chi_eval: arity mismatch");
  Poly r = chi_poly(lam);
  auto vs = detail::canonical_vars(static_cast<int>(lam.size()));
  for (size_t i = 0; i < xs.size(); ++i) r = r.eval_var(vs[i], xs[i]);
  return r.constant_value();
}

inline std::complex<double> chi_eval_complex(const Partition& lam,
                                             const std::vector<std::complex<double>>& xs) {
  std::map<VarId, std::complex<double>> pt;
  auto vs = detail::canonical_vars(static_cast<int>(lam.size()));
  for (size_t i = 0; i < xs.size(); ++i) pt[vs[i]] = xs[i];
  return chi_poly(lam).eval_complex(pt);
}

// tau_lambda(z_1..z_L) = chi_lambda(z_1^2, ..., z_L^2); the staircase variant
// tau_N takes lambda = lambda^{(N)} with N arguments.
inline Poly tau(const Partition& lam, const std::vector<PolyArg>& sq_args) {
  return chi(lam, sq_args);
}
inline PolyArg squared_var(VarId v) { return PolyArg::variable(v, 2); }
inline PolyArg squared_const(const Cyclo& c) { return PolyArg::constant(c * c); }

inline Poly tau_staircase(const std::vector<PolyArg>& sq_args) {
  return chi(staircase(static_cast<int>(sq_args.size())), sq_args);
}

inline Cyclo tau_eval(const Partition& lam, const std::vector<Cyclo>& zs) {
  std::vector<Cyclo> sq;
  sq.reserve(zs.size());
  for (auto& z : zs) sq.push_back(z * z);
  return chi_eval(lam, sq);
}
inline Cyclo tau_staircase_eval(const std::vector<Cyclo>& zs) {
  return tau_eval(staircase(static_cast<int>(zs.size())), zs);
}
inline std::complex<double> tau_staircase_eval_c(const std::vector<std::complex<double>>& zs) {
  std::vector<std::complex<double>> sq;
  sq.reserve(zs.size());
  for (auto& z : zs) sq.push_back(z * z);
  return chi_eval_complex(staircase(static_cast<int>(zs.size())), sq);
}

// phi_mu(z) = sum_j (z^{mu_j} - z^{-mu_j}) / (mu_j prod_{i != j} (mu_j^2 - mu_i^2))
inline Poly phi_mu_single(const std::vector<long>& mu, VarId z) {
  Poly r;
  for (size_t j = 0; j < mu.size(); ++j) {
    Rat den(mu[j]);
    for (size_t i = 0; i < mu.size(); ++i)
      if (i != j) den *= Rat(mu[j] * mu[j] - mu[i] * mu[i]);
    int e = static_cast<int>(mu[j]);
    r += (Poly::variable(z, e) - Poly::variable(z, -e)) * Cyclo(Rat(1) / den);
  }
  return r;
}

// phi_delta(z) = (z+1)(z-1)^{2L-1} / (z^L (2L-1)!)
inline Poly phi_delta_single(int L, VarId z) {
  Rat fact(1);
  for (long t = 2; t <= 2 * static_cast<long>(L) - 1; ++t) fact *= Rat(t);
  Poly r = (Poly::variable(z) + Poly::one()) * (Poly::variable(z) - Poly::one()).pow(2 * L - 1);
  r = r.shift_by(Monomial::single(z, -L));
  return r * Cyclo(Rat(1) / fact);
}

// Multivariate phi_mu(x_1..x_k) = a^{(k+1)}_mu(x_1..x_k) / a^{(1)}_mu.
inline Poly phi_mu_multi(const std::vector<long>& mu, const std::vector<VarId>& xs) {
  int k = static_cast<int>(xs.size());
  return a_trunc(k + 1, mu, xs) * Cyclo(Rat(1) / a1_mu(mu));
}

// q_lambda(z) = phi_mu(z)/phi_delta(z) = chi_lambda(z,1,..,1)/chi_lambda(1,..,1)
inline Poly q_lambda(const Partition& lam, VarId z) {
  int L = static_cast<int>(lam.size());
  Poly num = phi_mu_single(shifted_weight(lam), z);
  Poly den = phi_delta_single(L, z);
  auto q = num.try_divide(den);
  if (!q) throw InexactDivision("q_lambda: phi_delta does not divide phi_mu");
  return *q;
}

}  // namespace tbloop::sym

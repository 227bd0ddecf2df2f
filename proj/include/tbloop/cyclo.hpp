// Exact arithmetic in the degree-4 cyclotomic field Q(zeta), zeta a primitive
// 12th root of unity with minimal polynomial zeta^4 - zeta^2 + 1. The field
// contains every scalar constant used by the lattice model at its combinatorial
// point: q = zeta^2 - 1 (a primitive cube root of unity), i = zeta^3, the four
// values of s with s^4 = 1, and sqrt(3) = 2 zeta - zeta^3.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tbloop {

using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

class Cyclo {
 public:
  // c[0] + c[1] z + c[2] z^2 + c[3] z^3 on the power basis, z^4 = z^2 - 1.
  std::array<Rat, 4> c;

  Cyclo() : c{Rat(0), Rat(0), Rat(0), Rat(0)} {}
  explicit Cyclo(const Rat& r) : c{r, Rat(0), Rat(0), Rat(0)} {}
  Cyclo(long n) : Cyclo(Rat(n)) {}
  Cyclo(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3) : c{c0, c1, c2, c3} {}

  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(Rat(1)); }
  static Cyclo zeta() { return Cyclo(Rat(0), Rat(1), Rat(0), Rat(0)); }
  // q = e^{2 pi i/3} = zeta^2 - 1, q^3 = 1
  static Cyclo q() { return Cyclo(Rat(-1), Rat(0), Rat(1), Rat(0)); }
  // q^{-1} = q^2 = -zeta^2
  static Cyclo q_inv() { return Cyclo(Rat(0), Rat(0), Rat(-1), Rat(0)); }
  static Cyclo im() { return Cyclo(Rat(0), Rat(0), Rat(0), Rat(1)); }
  static Cyclo sqrt3() { return Cyclo(Rat(0), Rat(2), Rat(0), Rat(-1)); }
  // i sqrt(3) = q - q^{-1} = 2q + 1
  static Cyclo i_sqrt3() { return Cyclo(Rat(-1), Rat(0), Rat(2), Rat(0)); }

  bool is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
  }
  bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

  const Rat& rational_part() const { return c[0]; }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    Cyclo r;
    for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    Cyclo r;
    for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }
  friend Cyclo operator-(const Cyclo& a) {
    Cyclo r;
    for (int k = 0; k < 4; ++k) r.c[k] = -a.c[k];
    return r;
  }

  // Multiplication with reduction by z^4 = z^2 - 1 (hence z^5 = z^3 - z, z^6 = -1).
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    std::array<Rat, 7> t;
    for (auto& x : t) x = 0;
    for (int i = 0; i < 4; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (b.c[j] == 0) continue;
        t[i + j] += a.c[i] * b.c[j];
      }
    }
    Cyclo r(t[0], t[1], t[2], t[3]);
    // z^4 -> z^2 - 1 ; z^5 -> z^3 - z ; z^6 -> -1
    r.c[2] += t[4];
    r.c[0] -= t[4];
    r.c[3] += t[5];
    r.c[1] -= t[5];
    r.c[0] -= t[6];
    return r;
  }

  Cyclo& operator+=(const Cyclo& b) { *this = *this + b; return *this; }
  Cyclo& operator-=(const Cyclo& b) { *this = *this - b; return *this; }
  Cyclo& operator*=(const Cyclo& b) { *this = *this * b; return *this; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c == b.c; }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Total order (lexicographic on the basis coefficients), for canonical forms.
  friend bool operator<(const Cyclo& a, const Cyclo& b) {
    for (int k = 0; k < 4; ++k) {
      int s = cmp(a.c[k], b.c[k]);
      if (s != 0) return s < 0;
    }
    return false;
  }

  Cyclo inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    if (is_rational()) return Cyclo(Rat(1) / c[0]);
    // Solve M x = e0 where M is the matrix of multiplication by *this.
    std::array<std::array<Rat, 5>, 4> m;
    Cyclo pow = one();
    for (int col = 0; col < 4; ++col) {
      Cyclo colv = *this * pow;
      for (int row = 0; row < 4; ++row) m[row][col] = colv.c[row];
      pow = pow * zeta();
    }
    for (int row = 0; row < 4; ++row) m[row][4] = (row == 0) ? Rat(1) : Rat(0);
    for (int col = 0; col < 4; ++col) {
      int piv = -1;
      for (int row = col; row < 4; ++row)
        if (m[row][col] != 0) { piv = row; break; }
      if (piv < 0) throw std::domain_error("Cyclo: singular inverse (impossible in a field)");
      std::swap(m[col], m[piv]);
      Rat d = m[col][col];
      for (int k = col; k < 5; ++k) m[col][k] /= d;
      for (int row = 0; row < 4; ++row) {
        if (row == col || m[row][col] == 0) continue;
        Rat f = m[row][col];
        for (int k = col; k < 5; ++k) m[row][k] -= f * m[col][k];
      }
    }
    return Cyclo(m[0][4], m[1][4], m[2][4], m[3][4]);
  }

  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
  Cyclo& operator/=(const Cyclo& b) { *this = *this / b; return *this; }

  Cyclo pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo r = one(), base = *this;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  std::complex<double> to_complex() const {
    // zeta = e^{i pi/6}
    static const std::complex<double> z(0.8660254037844386467637232, 0.5);
    std::complex<double> r(0.0, 0.0), p(1.0, 0.0);
    for (int k = 0; k < 4; ++k) {
      r += c[k].get_d() * p;
      p *= z;
    }
    return r;
  }

  std::string str() const {
    static const char* names[4] = {"", "*z", "*z^2", "*z^3"};
    std::string s;
    for (int k = 0; k < 4; ++k) {
      if (c[k] == 0) continue;
      if (!s.empty()) s += " + ";
      s += c[k].get_str();
      s += names[k];
    }
    return s.empty() ? "0" : s;
  }
};

// s with s^4 = 1; index in {0,1,2,3} -> {1, i, -1, -i}.
inline Cyclo s_value(int idx) {
  switch (((idx % 4) + 4) % 4) {
    case 0: return Cyclo::one();
    case 1: return Cyclo::im();
    case 2: return -Cyclo::one();
    default: return -Cyclo::im();
  }
}

}  // namespace tbloop

#ifndef FLAGTWIST_GQ_HPP
#define FLAGTWIST_GQ_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace flagtwist {

using Rational = mpq_class;

inline Rational rat_frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Gaussian rational a + b*i, the base field Q(i) of the whole scalar tower.
struct GQ {
  Rational re, im;

  GQ() : re(0), im(0) {}
  GQ(long n) : re(n), im(0) {}
  GQ(const Rational& r) : re(r), im(0) {}
  GQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GQ i() { return GQ(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }

  GQ operator-() const { return GQ(-re, -im); }
  GQ operator+(const GQ& o) const { return GQ(re + o.re, im + o.im); }
  GQ operator-(const GQ& o) const { return GQ(re - o.re, im - o.im); }
  GQ operator*(const GQ& o) const {
    return GQ(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
  GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
  GQ& operator*=(const GQ& o) { *this = *this * o; return *this; }

  GQ inverse() const {
    if (is_zero()) throw std::domain_error("GQ: division by zero");
    Rational n = re * re + im * im;
    return GQ(re / n, -im / n);
  }
  GQ operator/(const GQ& o) const { return *this * o.inverse(); }

  bool operator==(const GQ& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GQ& o) const { return !(*this == o); }
};

inline GQ conj_scalar(const GQ& z) { return GQ(z.re, -z.im); }

inline std::string to_string(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

/// Canonical rendering "a+bi" with exact rationals, e.g. "1/2-3i".
inline std::string to_string(const GQ& z) {
  if (z.im == 0) return to_string(z.re);
  std::string s;
  if (z.re != 0) s = to_string(z.re);
  if (z.im > 0 && z.re != 0) s += "+";
  if (z.im == -1) s += "-";
  else if (z.im != 1) s += to_string(z.im);
  s += "i";
  return s;
}

}  // namespace flagtwist

#endif

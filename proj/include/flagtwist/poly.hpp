#ifndef FLAGTWIST_POLY_HPP
#define FLAGTWIST_POLY_HPP

#include <utility>
#include <vector>

#include "flagtwist/gq.hpp"

namespace flagtwist {

/// Univariate polynomial over Q(i), coefficients indexed by degree.
/// The one formal variable plays the role of mu in chart 0 and of
/// t = conj(mu) in chart 1; the chart change is conj_poly, never a
/// second variable.
struct Poly {
  std::vector<GQ> c;  // trailing coefficient nonzero unless empty (zero poly)

  Poly() {}
  Poly(long n) { if (n != 0) c.push_back(GQ(n)); }
  Poly(const Rational& r) { if (r != 0) c.push_back(GQ(r)); }
  Poly(const GQ& z) { if (!z.is_zero()) c.push_back(z); }

  static Poly variable() {
    Poly p;
    p.c = {GQ(0), GQ(1)};
    return p;
  }

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  GQ coeff(size_t k) const { return k < c.size() ? c[k] : GQ(); }
  GQ constant_term() const { return coeff(0); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  Poly operator+(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = coeff(k) + o.coeff(k);
    r.normalize();
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, GQ());
    for (size_t a = 0; a < c.size(); ++a)
      for (size_t b = 0; b < o.c.size(); ++b) r.c[a + b] += c[a] * o.c[b];
    r.normalize();
    return r;
  }
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  GQ eval(const GQ& x) const {
    GQ r;
    for (size_t k = c.size(); k-- > 0;) r = r * x + c[k];
    return r;
  }
};

/// Coefficient-wise conjugation; reads the source variable mu and the
/// target variable t = conj(mu).
inline Poly conj_poly(const Poly& p) {
  Poly r = p;
  for (auto& x : r.c) x = conj_scalar(x);
  return r;
}

/// Unique interpolant of degree <= degree_bound through all points.
/// Extra points beyond degree_bound+1 are consistency-checked; a mismatch
/// signals a non-polynomial dependence upstream.
inline Poly poly_interpolate(const std::vector<std::pair<GQ, GQ>>& points,
                             int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("poly_interpolate: negative bound");
  size_t need = static_cast<size_t>(degree_bound) + 1;
  if (points.size() < need)
    throw std::invalid_argument("poly_interpolate: not enough points");
  for (size_t a = 0; a < points.size(); ++a)
    for (size_t b = a + 1; b < points.size(); ++b)
      if (points[a].first == points[b].first)
        throw std::invalid_argument("poly_interpolate: duplicate abscissa");

  // Newton form on the first degree_bound+1 points.
  std::vector<GQ> xs, coef;
  Poly p, basis(1L);
  for (size_t k = 0; k < need; ++k) {
    const GQ& x = points[k].first;
    GQ num = points[k].second - p.eval(x);
    GQ den = basis.eval(x);
    GQ ck = num / den;
    p += basis * Poly(ck);
    Poly lin;
    lin.c = {-x, GQ(1)};
    lin.normalize();
    basis *= lin;
  }
  for (size_t k = need; k < points.size(); ++k)
    if (p.eval(points[k].first) != points[k].second)
      throw std::domain_error("poly_interpolate: inconsistent overdetermined points");
  return p;
}

}  // namespace flagtwist

#endif

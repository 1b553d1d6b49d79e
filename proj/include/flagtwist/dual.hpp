#ifndef FLAGTWIST_DUAL_HPP
#define FLAGTWIST_DUAL_HPP

#include "flagtwist/poly.hpp"

namespace flagtwist {

/// Dual scalar a + b*eps with eps^2 = 0 over any ring R of the tower.
/// The deriv slot mechanizes d/deps at eps = 0.
template <class R>
struct Dual {
  R value, deriv;

  Dual() : value(), deriv() {}
  Dual(long n) : value(n), deriv() {}
  Dual(const Rational& r) : value(r), deriv() {}
  Dual(R v) : value(std::move(v)), deriv() {}
  Dual(R v, R d) : value(std::move(v)), deriv(std::move(d)) {}

  static Dual epsilon() { return Dual(R(0L), R(1L)); }

  bool is_zero() const { return value.is_zero() && deriv.is_zero(); }

  Dual operator-() const { return Dual(-value, -deriv); }
  Dual operator+(const Dual& o) const { return Dual(value + o.value, deriv + o.deriv); }
  Dual operator-(const Dual& o) const { return Dual(value - o.value, deriv - o.deriv); }
  Dual operator*(const Dual& o) const {
    return Dual(value * o.value, value * o.deriv + deriv * o.value);
  }
  Dual& operator+=(const Dual& o) { value += o.value; deriv += o.deriv; return *this; }
  Dual& operator-=(const Dual& o) { value -= o.value; deriv -= o.deriv; return *this; }
  Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }

  bool operator==(const Dual& o) const { return value == o.value && deriv == o.deriv; }
  bool operator!=(const Dual& o) const { return !(*this == o); }
};

template <class R>
Dual<R> conj_value(const Dual<R>& d);

inline GQ conj_value(const GQ& z) { return conj_scalar(z); }
inline Poly conj_value(const Poly& p) { return conj_poly(p); }
// eps is treated as a real parameter: conjugate component-wise.
template <class R>
Dual<R> conj_value(const Dual<R>& d) {
  return Dual<R>(conj_value(d.value), conj_value(d.deriv));
}

/// Uniform construction of tower scalars from a rational constant; this is
/// the only division the generic solvers ever perform (by w_alpha and k!).
template <class R>
struct ring_traits {
  static R from_rational(const Rational& q) { return R(q); }
};

template <class R>
R scalar_rat(const Rational& q) {
  return ring_traits<R>::from_rational(q);
}

}  // namespace flagtwist

#endif

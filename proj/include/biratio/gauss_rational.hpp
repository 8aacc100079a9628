#ifndef BIRATIO_GAUSS_RATIONAL_HPP
#define BIRATIO_GAUSS_RATIONAL_HPP

#include <complex>
#include <string>

#include "biratio/errors.hpp"
#include "biratio/rational.hpp"

namespace biratio {

/// Element re + im*i of Q(i).
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit embedding Q -> Q(i)
  GaussRational(int r) : re(r) {}                  // NOLINT
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRational inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw Error(ErrorKind::ZeroDenominator, "inverse of 0 in Q(i)");
    return {re / n, -im / n};
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

inline bool is_zero(const GaussRational& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }
inline bool is_one(const GaussRational& z) { return z.re == 1 && sgn(z.im) == 0; }
inline GaussRational divexact(const GaussRational& a, const GaussRational& b) { return a / b; }
inline GaussRational ring_gcd(const GaussRational& a, const GaussRational& b) {
  return (is_zero(a) && is_zero(b)) ? GaussRational() : GaussRational(1);
}

inline std::string to_string(const GaussRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string s = "(" + to_string(z.re);
  s += sgn(z.im) < 0 ? "-" : "+";
  s += to_string(Rational(abs(z.im))) + "*i)";
  return s;
}

}  // namespace biratio

#endif  // BIRATIO_GAUSS_RATIONAL_HPP

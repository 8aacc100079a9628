#ifndef BIRATIO_QUAD_EXT_HPP
#define BIRATIO_QUAD_EXT_HPP

#include <compare>
#include <string>
#include <utility>

#include "biratio/errors.hpp"
#include "biratio/rational.hpp"

namespace biratio {

/// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)), D > 1
/// square-free. Plain rationals live in any field (b = 0); arithmetic
/// between two irrational values with different D throws MixedField.
class QuadExt {
 public:
  QuadExt() : d_(1) {}
  QuadExt(Rational a) : d_(1), a_(std::move(a)) {}  // NOLINT: rationals embed in every field
  QuadExt(Integer d, Rational a, Rational b);

  /// sqrt(n) for a positive integer n, with the square part pulled out:
  /// sqrt(50) = 5*sqrt(2).
  static QuadExt sqrt_of(const Integer& n);

  const Integer& radicand() const { return d_; }
  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Exact sign of the real embedding.
  int sign() const;

  QuadExt conj() const { return QuadExt(d_, a_, -b_); }
  /// a^2 - b^2 D, the field norm.
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  QuadExt inverse() const;

  double to_double() const;

  /// Rigorous decimal enclosure [lo, hi] with `digits` fractional digits.
  std::pair<Rational, Rational> enclosure(unsigned digits) const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend QuadExt operator-(const QuadExt& a) { return QuadExt(a.d_, -a.a_, -a.b_); }

  friend bool operator==(const QuadExt& u, const QuadExt& v);
  friend std::strong_ordering operator<=>(const QuadExt& u, const QuadExt& v);

 private:
  void adopt_field(const QuadExt& o);

  Integer d_;
  Rational a_;
  Rational b_;
};

/// Three-way comparison decided by rational sign analysis only.
std::strong_ordering quad_cmp(const QuadExt& u, const QuadExt& v);

/// "a+b*sqrt(D)" (or just "a" when b = 0).
std::string to_string(const QuadExt& q);

/// Decimal string of a rational rounded toward zero to `digits` places.
std::string to_decimal(const Rational& q, unsigned digits);

}  // namespace biratio

#endif  // BIRATIO_QUAD_EXT_HPP

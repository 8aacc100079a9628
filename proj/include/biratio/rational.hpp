#ifndef BIRATIO_RATIONAL_HPP
#define BIRATIO_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace biratio {

using Integer = mpz_class;

/// Arbitrary precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q" and plain decimals such as "-0.125"; the result is
/// canonicalized. Throws Error(Parse) on malformed input.
Rational parse_rational(std::string_view text);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational exact_rational(double value);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

/// Division in a field; the ring-generic algorithms call this.
inline Rational divexact(const Rational& a, const Rational& b) { return a / b; }

/// num/den in lowest terms; den != 0.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// gcd in a field: any nonzero element is a unit.
inline Rational ring_gcd(const Rational& a, const Rational& b) {
  return (is_zero(a) && is_zero(b)) ? Rational(0) : Rational(1);
}

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_one(const Integer& z) { return z == 1; }
inline Integer divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Integer ring_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

}  // namespace biratio

#endif  // BIRATIO_RATIONAL_HPP

#ifndef BIRATIO_MODULAR_HPP
#define BIRATIO_MODULAR_HPP

#include <string>

#include "biratio/bipoly.hpp"

namespace biratio {

/// Integer multiple of p with coprime integer coefficients and positive
/// leading coefficient.
UPoly<Integer> primitive_integer(const UPoly<Rational>& p);

/// Monic gcd over Q by word-size prime images, Chinese remaindering and
/// trial division.
UPoly<Rational> gcd_rational(const UPoly<Rational>& a, const UPoly<Rational>& b);

/// Monic squarefree part over Q.
UPoly<Rational> squarefree_rational(const UPoly<Rational>& p);

/// Res_v of the integer multiples of p and q (so Res_v(p, q) up to a
/// nonzero rational factor), by evaluation/interpolation modulo enough
/// primes to exceed the Sylvester row-norm bound.
UPoly<Rational> resultant_up_to_unit(const BiPoly<Rational>& p, const BiPoly<Rational>& q, Var v);

/// Rough operation count of resultant_up_to_unit(p, q, v).
double elimination_work(const BiPoly<Rational>& p, const BiPoly<Rational>& q, Var v);

/// Outcome of trying to prove that {p1=0, q1=0} and {p2=0, q2=0} have no
/// common solution in C^2.
struct ModularCertificate {
  bool certified = false;
  std::string detail;
};

/// Reduces the eliminants Res_v(p1,q1) and Res_v(p2,q2) modulo word-size
/// primes and checks that, as binary forms of their degree bounds, they are
/// coprime. Coprimality mod p implies coprimality over Q (a common factor
/// over Z is primitive and survives reduction), hence no common solution.
/// `certified = false` means undecided.
ModularCertificate modular_disjointness(const BiPoly<Rational>& p1, const BiPoly<Rational>& q1,
                                        const BiPoly<Rational>& p2, const BiPoly<Rational>& q2);

}  // namespace biratio

#endif  // BIRATIO_MODULAR_HPP

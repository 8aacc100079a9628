#ifndef BIRATIO_ROOTS_HPP
#define BIRATIO_ROOTS_HPP

#include <complex>
#include <vector>

#include "biratio/rational.hpp"
#include "biratio/upoly.hpp"

namespace biratio {

using Complex = std::complex<double>;

/// Approximate root with an a posteriori inclusion radius: the disc of
/// radius n*|p(z)/p'(z)| around z contains a root of the degree-n p.
struct NumericRoot {
  Complex value;
  double radius = 0.0;
};

/// Roots of a polynomial given by complex coefficients (low to high).
/// Companion-matrix eigenvalues, then Newton polishing.
std::vector<NumericRoot> polynomial_roots(const std::vector<Complex>& coeffs);

std::vector<NumericRoot> polynomial_roots(const UPoly<Rational>& p);

/// Coefficients of p scaled to max modulus 1 and converted to doubles.
std::vector<Complex> to_complex_coeffs(const UPoly<Rational>& p);

}  // namespace biratio

#endif  // BIRATIO_ROOTS_HPP

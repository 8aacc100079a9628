#include "biratio/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace biratio {

namespace {

using LComplex = std::complex<long double>;

struct Eval {
  LComplex value, deriv;
};

Eval horner(const std::vector<Complex>& c, LComplex z) {
  LComplex p = 0, dp = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + LComplex(it->real(), it->imag());
  }
  return {p, dp};
}

}  // namespace

std::vector<NumericRoot> polynomial_roots(const std::vector<Complex>& coeffs) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {};
  std::vector<NumericRoot> out;
  // Roots at zero are exact.
  int zeros = 0;
  while (zeros < n && std::abs(c[zeros]) == 0.0) ++zeros;
  for (int k = 0; k < zeros; ++k) out.push_back({Complex(0.0, 0.0), 0.0});
  std::vector<Complex> reduced(c.begin() + zeros, c.end());
  const int m = static_cast<int>(reduced.size()) - 1;
  if (m == 0) return out;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) companion(i, m - 1) = -reduced[i] / reduced[m];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  for (int i = 0; i < m; ++i) {
    LComplex z(ev[i].real(), ev[i].imag());
    for (int it = 0; it < 8; ++it) {
      auto e = horner(reduced, z);
      if (std::abs(e.deriv) == 0.0L) break;
      LComplex step = e.value / e.deriv;
      z -= step;
      if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(z))) break;
    }
    auto e = horner(reduced, z);
    double radius = std::abs(e.deriv) == 0.0L
                        ? std::numeric_limits<double>::infinity()
                        : static_cast<double>(m * std::abs(e.value / e.deriv));
    // Never claim more than double resolution.
    radius = std::max(radius, 4.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(std::abs(z)));
    out.push_back({Complex(static_cast<double>(z.real()), static_cast<double>(z.imag())), radius});
  }
  return out;
}

std::vector<Complex> to_complex_coeffs(const UPoly<Rational>& p) {
  Rational big = 0;
  for (const auto& c : p.coeffs()) big = std::max<Rational>(big, abs(c));
  std::vector<Complex> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(Rational(c / big).get_d(), 0.0);
  return out;
}

std::vector<NumericRoot> polynomial_roots(const UPoly<Rational>& p) {
  if (p.degree() <= 0) return {};
  return polynomial_roots(to_complex_coeffs(p));
}

}  // namespace biratio

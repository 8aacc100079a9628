#ifndef BIRATIO_BIHOM_HPP
#define BIRATIO_BIHOM_HPP

#include <string>
#include <utility>

#include "biratio/bipoly.hpp"

namespace biratio {

/// Bihomogeneous form of bidegree (deg_x, deg_y) in (x0,x1; y0,y1), stored
/// dehomogenized at x0 = y0 = 1. A factor x0^k shows up as deg_x(poly) being
/// k below deg_x; likewise for y0.
template <typename S>
struct BiHomForm {
  BiPoly<S> poly;
  int deg_x = 0;
  int deg_y = 0;

  bool zero() const { return poly.zero(); }

  /// Value at homogeneous coordinates: sum c_ij x1^i x0^(a-i) y1^j y0^(b-j).
  template <typename T>
  T operator()(const T& x0, const T& x1, const T& y0, const T& y1) const {
    std::vector<T> px0(deg_x + 1), px1(deg_x + 1), py0(deg_y + 1), py1(deg_y + 1);
    px0[0] = px1[0] = py0[0] = py1[0] = T(1);
    for (int i = 1; i <= deg_x; ++i) {
      px0[i] = px0[i - 1] * x0;
      px1[i] = px1[i - 1] * x1;
    }
    for (int j = 1; j <= deg_y; ++j) {
      py0[j] = py0[j - 1] * y0;
      py1[j] = py1[j - 1] * y1;
    }
    T acc{};
    for (const auto& [m, c] : poly.terms())
      acc = acc + scalar_cast<T>(c) * px1[m.first] * px0[deg_x - m.first] * py1[m.second] * py0[deg_y - m.second];
    return acc;
  }

  friend bool operator==(const BiHomForm& a, const BiHomForm& b) {
    return a.deg_x == b.deg_x && a.deg_y == b.deg_y && a.poly == b.poly;
  }
};

template <typename S>
BiHomForm<S> operator*(const BiHomForm<S>& a, const BiHomForm<S>& b) {
  return {a.poly * b.poly, a.deg_x + b.deg_x, a.deg_y + b.deg_y};
}

template <typename S>
BiHomForm<S> operator+(const BiHomForm<S>& a, const BiHomForm<S>& b) {
  if (a.deg_x != b.deg_x || a.deg_y != b.deg_y)
    throw Error(ErrorKind::DegenerateComposition, "adding forms of different bidegree");
  return {a.poly + b.poly, a.deg_x, a.deg_y};
}

/// One projective coordinate of a map of P1 x P1: the affine value is
/// num/den, so the image point is [x0 : x1] = [den : num].
template <typename S>
struct BiHomPair {
  BiHomForm<S> num;
  BiHomForm<S> den;

  std::pair<int, int> bidegree() const { return {num.deg_x, num.deg_y}; }

  friend bool operator==(const BiHomPair& a, const BiHomPair& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const BiHomPair& a, const BiHomPair& b) { return !(a == b); }
};

/// Removes every common bihomogeneous factor (including powers of x0, y0)
/// and brings the pair to canonical form: jointly content-primitive with a
/// positive graded-lex leading coefficient of den (of num if den = 0).
template <typename S>
BiHomPair<S> clear_pair(BiHomForm<S> num, BiHomForm<S> den) {
  if (num.zero() && den.zero())
    throw Error(ErrorKind::DegenerateComposition, "coordinate pair collapsed to (0, 0)");
  if (num.deg_x != den.deg_x || num.deg_y != den.deg_y)
    throw Error(ErrorKind::DegenerateComposition, "coordinate forms of unequal bidegree");
  if (num.zero() || den.zero()) {
    // The nonzero form is a unit multiple of the gcd, so it clears to 1.
    BiHomForm<S> one{BiPoly<S>(S(1)), 0, 0};
    BiHomForm<S> zero{BiPoly<S>(), 0, 0};
    return num.zero() ? BiHomPair<S>{zero, one} : BiHomPair<S>{one, zero};
  }
  BiPoly<S> g = gcd(num.poly, den.poly);
  int kx = std::min(num.deg_x - num.poly.deg_x(), den.deg_x - den.poly.deg_x());
  int ky = std::min(num.deg_y - num.poly.deg_y(), den.deg_y - den.poly.deg_y());
  int drop_x = g.deg_x() + kx, drop_y = g.deg_y() + ky;
  if (g.total_degree() > 0) {
    num.poly = divexact(num.poly, g);
    den.poly = divexact(den.poly, g);
  }
  num.deg_x -= drop_x;
  den.deg_x -= drop_x;
  num.deg_y -= drop_y;
  den.deg_y -= drop_y;
  S unit = canonical_unit<S>({&num.poly, &den.poly}, den.poly);
  num.poly *= unit;
  den.poly *= unit;
  return {std::move(num), std::move(den)};
}

/// Projective data of the rational function num/den.
template <typename S>
BiHomPair<S> bihomogenize(const BiPoly<S>& num, const BiPoly<S>& den) {
  if (den.zero()) throw Error(ErrorKind::ZeroDenominator, "denominator is the zero polynomial");
  int a = std::max(num.deg_x(), den.deg_x());
  int b = std::max(num.deg_y(), den.deg_y());
  a = std::max(a, 0);
  b = std::max(b, 0);
  return clear_pair(BiHomForm<S>{num, a, b}, BiHomForm<S>{den, a, b});
}

template <typename S>
std::string to_string(const BiHomPair<S>& p) {
  if (p.den.poly == BiPoly<S>(S(1))) return to_string(p.num.poly);
  return "(" + to_string(p.num.poly) + ")/(" + to_string(p.den.poly) + ")";
}

}  // namespace biratio

#endif  // BIRATIO_BIHOM_HPP

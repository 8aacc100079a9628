#ifndef BIRATIO_INDETERMINACY_HPP
#define BIRATIO_INDETERMINACY_HPP

#include <string>
#include <vector>

#include "biratio/roots.hpp"
#include "biratio/surface_map.hpp"

namespace biratio {

/// Point of P1: a complex affine value or infinity.
struct P1Point {
  bool infinite = false;
  Complex value{};

  static P1Point at(Complex z) { return {false, z}; }
  static P1Point infinity() { return {true, {}}; }
};

/// Chordal distance on the Riemann sphere (at most 1).
double chordal_distance(const P1Point& a, const P1Point& b);

std::string to_string(const P1Point& p);

/// Which part of P1 x P1 a system lives on: both coordinates finite, x = oo,
/// y = oo, or the single point (oo, oo).
enum class Stratum { Affine, XInfinite, YInfinite, BothInfinite };

std::string to_string(Stratum s);

/// {p = 0, q = 0} restricted to one stratum. On XInfinite p, q involve y
/// only, on YInfinite x only, on BothInfinite they are constants.
struct IndSystem {
  int coordinate = 0;
  Stratum stratum = Stratum::Affine;
  BiPoly<Rational> p, q;
};

struct IndPoint {
  P1Point x, y;
  double radius = 0.0;
  int coordinate = 0;
};

/// Largest chordal distance over the two factors.
double point_distance(const IndPoint& a, const IndPoint& b);

struct IndSet {
  std::vector<IndSystem> systems;
  std::vector<IndPoint> points;
};

/// Common zeros of the coordinate pairs of f. Points shared by both
/// coordinates are listed once.
IndSet indeterminacy_set(const SurfaceMap& f);

/// The four stratum restrictions of one coordinate pair.
std::vector<IndSystem> stratum_systems(const MapCoordinate& c, int coordinate);

/// Numeric solutions of one system, exact elimination first.
std::vector<IndPoint> solve_system(const IndSystem& s);

struct DisjointnessCertificate {
  bool disjoint = true;
  std::vector<IndPoint> overlap;
  int modular_checks = 0;
  int exact_checks = 0;
  std::vector<std::string> log;
};

/// Decides Ind(f) and Ind(f^-1) disjoint, exactly. Needs the explicit inverse.
DisjointnessCertificate ind_disjoint(const SurfaceMap& f);

/// Largest distance from a point of `a` to the nearest point of `b` and
/// back (Hausdorff distance, chordal metric). Infinite if exactly one is empty.
double hausdorff_distance(const std::vector<IndPoint>& a, const std::vector<IndPoint>& b);

}  // namespace biratio

#endif  // BIRATIO_INDETERMINACY_HPP

#ifndef BIRATIO_CONSTRUCTIONS_HPP
#define BIRATIO_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "biratio/degree.hpp"
#include "biratio/indeterminacy.hpp"

namespace biratio {

/// n, d and the rotation parameters t_j = tan(theta_j / 2).
struct HermanFamilyParams {
  int n = 2;
  int d = 1;
  Rational t1 = 0;
  Rational t2 = 0;
};

/// F_n = (x^2d + (2/n) x^d + 1) / (x^2d + 1) with its zero/pole diagnostics.
struct FnData {
  UPoly<Rational> numerator;
  UPoly<Rational> denominator;
  bool coprime = false;
  bool simple_zeros = false;
  bool simple_poles = false;
  int real_zeros = 0;
  int real_poles = 0;
  std::vector<NumericRoot> zeros;
  std::vector<NumericRoot> poles;
};

/// Diagnostics only; never throws on a bad (n, d).
FnData analyze_Fn(int n, int d);
/// Throws SimplicityViolation or RealRootDetected.
FnData build_Fn(int n, int d);

/// Number of distinct real roots (Sturm).
int count_real_roots(const UPoly<Rational>& p);

/// g_n(x, y) = (F_n(x) y, x) with inverse (y, x / F_n(y)).
SurfaceMap build_gn(int n, int d);
/// Componentwise (x + t) / (1 - t x); the inverse uses -t.
SurfaceMap build_rotation(const Rational& t1, const Rational& t2);
/// R_theta o g_n^2 with inverse g_n^-2 o R_-theta.
SurfaceMap build_fn_theta(const HermanFamilyParams& p);

/// [[2d, 1], [1, 0]].
BidegreeMatrix herman_matrix(long d);
/// d + sqrt(d^2 + 1).
QuadExt leading_eigenvalue(long d);
/// lambda H + V.
AmpleClass eigen_class(long d);

/// e^{i(+-pi/2 + 2k pi)/d}.
std::vector<Complex> poles_closed_form(int d);
/// e^{i(+-arccos(1/n) + 2k pi)/d}, the unshifted candidate form.
std::vector<Complex> zeros_displayed_form(int n, int d);
/// e^{i(pi +- arccos(1/n) + 2k pi)/d}, from x^d = -1/n +- i sqrt(1 - 1/n^2).
std::vector<Complex> zeros_factored_form(int n, int d);

/// (x + t) / (1 - t x) on P1 in floating point.
P1Point rotate_point(const P1Point& p, double t);

/// Closed-form indeterminacy sets built from zero set Z and pole set P.
std::vector<IndPoint> ind_gn_closed(const std::vector<Complex>& Z, const std::vector<Complex>& P);
std::vector<IndPoint> ind_gn_inverse_closed(const std::vector<Complex>& Z, const std::vector<Complex>& P);
std::vector<IndPoint> ind_fn_theta_closed(const std::vector<Complex>& Z, const std::vector<Complex>& P);
std::vector<IndPoint> ind_fn_theta_inverse_closed(const std::vector<Complex>& Z, const std::vector<Complex>& P,
                                                  double t1, double t2);

struct ClosedFormIndReport {
  std::vector<IndPoint> computed;
  std::vector<IndPoint> displayed;
  std::vector<IndPoint> factored;
  double displayed_distance = 0.0;
  double factored_distance = 0.0;
  double tolerance = 1e-10;
  /// "factored", "displayed", "both" or "neither".
  std::string matching;
  /// Computed points farther than tolerance from every factored-form point.
  std::vector<IndPoint> discrepancies;
};

ClosedFormIndReport compare_closed_form(std::vector<IndPoint> computed, std::vector<IndPoint> displayed,
                                        std::vector<IndPoint> factored, double tolerance);

/// Lower bound on the chordal separation of the closed-form Ind(f) and
/// Ind(f^-1), component by component. Cheap at any d.
double closed_form_separation(int n, int d, double t1, double t2);

/// True when x^deg p(-1/x) is a scalar multiple of p, i.e. the root set is
/// stable under x -> -1/x. Exact.
bool stable_under_antipode(const UPoly<Rational>& p);

struct OrbitGeometryCheck {
  int samples = 0;
  /// Every sampled orbit met the unit circle in exactly two points.
  bool two_crossings = false;
  /// Largest distance of a crossing from {x, -1/x}.
  double max_mismatch = 0.0;
};

/// Orbits of x in S^1 \ {i, -i} under all R_theta meet S^1 only at x, -1/x.
OrbitGeometryCheck check_rotation_orbits(int samples, int theta_grid);

struct VerifyOptions {
  /// Largest d handled by symbolic composition; above it closed forms and
  /// matrices stand in.
  int symbolic_max_d = 3;
  double tolerance = 1e-10;
};

struct TheoremReport {
  HermanFamilyParams params;
  bool symbolic = false;
  std::optional<FnData> fn;
  std::optional<ClosedFormIndReport> ind_f;
  std::optional<ClosedFormIndReport> ind_f_inverse;
  std::optional<BidegreeMatrix> bidegree;
  std::optional<DisjointnessCertificate> disjointness;
  double closed_form_separation = 0.0;
  bool disjoint = false;
  bool all_nonreal = false;
  double min_imag_part = 0.0;
  std::optional<XieVerdict> xie;
  bool degree_identities = false;
  std::optional<OrbitGeometryCheck> orbit_geometry;
  bool poles_antipode_stable = false;
  bool zeros_antipode_stable = false;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double epsilon = 0.0;
  std::vector<std::string> failures;
};

TheoremReport verify_theorem(const HermanFamilyParams& p, const VerifyOptions& opts = {});

}  // namespace biratio

#endif  // BIRATIO_CONSTRUCTIONS_HPP

#ifndef BIRATIO_DYNAMICS_HPP
#define BIRATIO_DYNAMICS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "biratio/indeterminacy.hpp"
#include "biratio/surface_map.hpp"

namespace biratio {

/// Angles on S^1 x S^1, each in [0, 2 pi). The circle is P1(R) through the
/// Cayley transform w = (x - i) / (x + i), w = e^{i phi}.
struct TorusPoint {
  double phi1 = 0.0;
  double phi2 = 0.0;
};

/// Representative of a in (-pi, pi].
double wrap_angle(double a);
/// Representative of a in [0, 2 pi).
double normalize_angle(double a);
TorusPoint normalized(TorusPoint p);
/// Largest wrapped angle difference.
double torus_distance(const TorusPoint& a, const TorusPoint& b);

/// x on P1(R) for the angle phi, as the homogeneous pair [x0 : x1].
std::array<Complex, 2> circle_point(double phi);
/// Cayley image w of [x0 : x1].
Complex cayley(const std::array<Complex, 2>& x);

/// Point of P1 x P1 in homogeneous coordinates.
using HomPoint = std::array<Complex, 4>;  // x0, x1, y0, y1

/// Floating-point evaluator for a SurfaceMap.
class NumericMap {
 public:
  explicit NumericMap(const SurfaceMap& f);

  /// Image in homogeneous coordinates, each pair scaled to max modulus 1.
  /// Throws SingularityApproach when a coordinate pair has modulus below
  /// guard * (sum of |coefficients|) at the scaled input, i.e. near Ind.
  HomPoint operator()(const HomPoint& p, double guard = 1e-8) const;

  /// Smallest relative modulus of the two image pairs (the quantity the
  /// guard compares against).
  double margin(const HomPoint& p) const;

  TorusPoint on_torus(const TorusPoint& p, double guard = 1e-8) const;

 private:
  struct Term {
    int i, j;
    double c;
  };
  struct Form {
    int deg_x = 0, deg_y = 0;
    std::vector<Term> terms;
    double scale = 0.0;
    Complex eval(const HomPoint& p) const;
  };
  Form forms_[2][2];  // [coordinate][den, num]
};

HomPoint scaled(HomPoint p);
HomPoint to_hom(const TorusPoint& p);

struct OrbitRecord {
  TorusPoint seed;
  int steps = 0;
  /// lifts[k] is a lift of f^k(seed) to R^2; consecutive entries differ by
  /// less than pi in each coordinate.
  std::vector<std::array<double, 2>> lifts;
  /// Smallest guard margin met along the orbit.
  double min_margin = 0.0;

  TorusPoint point(int k) const;
};

/// N forward steps. Throws SingularityApproach naming the step.
OrbitRecord orbit(const NumericMap& f, TorusPoint seed, int steps, double guard = 1e-8);

struct RotationVector {
  double rho1 = 0.0;
  double rho2 = 0.0;
  /// Largest gap between the N/2 and N averages.
  double error = 0.0;
};

/// Birkhoff average of lift increments; needs at least 100 steps.
RotationVector rotation_vector(const OrbitRecord& o);

enum class FixedPointKind { RotationLike, Degenerate, Hyperbolic };
const char* to_string(FixedPointKind k);

struct FixedPointRecord {
  TorusPoint location;
  double residual = 0.0;
  Eigen::Matrix2d jacobian;
  double det_df_minus_id = 0.0;
  FixedPointKind kind = FixedPointKind::Degenerate;
};

struct FixedPointCensus {
  std::vector<FixedPointRecord> points;
  int seeds = 0;
  int nonconverged = 0;
  /// chi(T^2).
  int euler_characteristic = 0;
  /// The count matches chi and no isolated point has det(df - I) <= 0.
  bool lefschetz_consistent = false;
  /// Factor j acts as the identity on the whole grid.
  std::array<bool, 2> identity_factor{false, false};
  bool degenerate_identity = false;
  std::vector<std::string> notes;
};

/// Newton from a grid x grid array of seeds on f(phi) - phi (mod 2 pi),
/// central-difference Jacobians with step 1e-6, dedup within tol.
FixedPointCensus fixed_point_census(const NumericMap& f, int grid, double tol = 1e-6);

/// Max torus distance between f and g over grid^2 cell centres.
double sup_distance(const NumericMap& f, const NumericMap& g, int grid);

struct DiophantineReport {
  std::array<double, 2> alpha{};
  double beta = 0.0;
  int kmax = 0;
  std::array<int, 3> argmin{};
  /// min over 0 < |k|_oo <= kmax of |k1 a1 + k2 a2 + 2 pi k3| |k|_oo^beta.
  double c_emp = 0.0;
  /// Exact resonances of smallest norm, sign-normalized; empty if none.
  std::vector<std::array<int, 3>> resonances;
};

/// Exhaustive scan; kmax <= 1000.
DiophantineReport diophantine_check(std::array<double, 2> alpha, double beta, int kmax);

struct ProbeSeed {
  HomPoint start{};
  bool bounded = true;
  bool ind_approach = false;
  bool blew_up = false;
  /// Largest distance from the real locus reached (see cayley_drift).
  double max_drift = 0.0;
  double min_ind_distance = 0.0;
  /// Step at which the orbit was stopped; 0 when it ran to the end.
  int stopped_at = 0;
};

struct ProbeTrace {
  int step;
  double im_x, im_y, dist_to_ind;
};

struct ProbeOptions {
  double offset = 1e-3;
  int seeds = 100;
  int steps = 10000;
  std::uint64_t rng_seed = 1;
  /// Orbits whose cayley_drift exceeds this count as unbounded.
  double escape_drift = 20.0;
  /// Chordal distance to Ind(f) u Ind(f^-1) that counts as an approach.
  double ind_radius = 1e-6;
};

struct ProbeReport {
  std::vector<ProbeSeed> seeds;
  bool all_bounded = false;
  double max_drift = 0.0;
  double min_ind_distance = 0.0;
  /// Forward then backward trace of the first seed.
  std::vector<ProbeTrace> trace;
};

/// |log |w|| for the Cayley image w of x: zero exactly on P1(R), infinite at
/// x = +-i.
double cayley_drift(const std::array<Complex, 2>& x);

/// |Im z| of the coordinate in the chart z = x or z = -1/x with |z| <= 1;
/// zero exactly on P1(R).
double real_drift(const std::array<Complex, 2>& x);

/// Heuristic normality probe near X(R): forward and backward iteration of
/// seeds at Cayley distance `offset` from X(R) in both coordinates (so
/// imaginary parts of order offset). Evidence, not proof.
ProbeReport complex_probe(const SurfaceMap& f, const ProbeOptions& opts);

void write_orbit_csv(std::ostream& os, const OrbitRecord& o);
void write_probe_csv(std::ostream& os, const ProbeReport& r);

}  // namespace biratio

#endif  // BIRATIO_DYNAMICS_HPP

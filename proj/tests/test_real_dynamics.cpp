#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "biratio/constructions.hpp"
#include "biratio/dynamics.hpp"
#include "biratio/gauss_rational.hpp"
#include "doctest.h"

using namespace biratio;
using P = BiPoly<Rational>;

namespace {

constexpr double kPi = std::numbers::pi;

double theta(const Rational& t) { return 2 * std::atan(t.get_d()); }

const Rational kT1(1, 3), kT2(2, 5);

}  // namespace

TEST_CASE("angle helpers") {
  CHECK(wrap_angle(3 * kPi / 2) == doctest::Approx(-kPi / 2));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(normalize_angle(-0.5) == doctest::Approx(2 * kPi - 0.5));
  CHECK(torus_distance({0.1, 6.2}, {6.2, 0.1}) == doctest::Approx(2 * kPi - 6.1));
  // Cayley round trip: the circle point for phi has Cayley image e^{i phi}.
  for (double phi : {0.0, 0.3, kPi, 4.0, 6.0}) {
    Complex w = cayley(circle_point(phi));
    CHECK(std::abs(w - std::polar(1.0, phi)) < 1e-12);
  }
}

TEST_CASE("orbit of a quarter-turn rotation") {
  NumericMap r(build_rotation(1, 0));
  auto o = orbit(r, {0.0, 0.0}, 12);
  REQUIRE(o.lifts.size() == 13);
  for (int k = 1; k <= 12; ++k) {
    CHECK(o.lifts[k][0] - o.lifts[k - 1][0] == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(std::abs(o.lifts[k][1]) < 1e-12);
  }
}

TEST_CASE("orbit guard near a real indeterminacy point") {
  // (y, y/x) is undefined at (0, 0), which is phi = (pi, pi).
  NumericMap f(SurfaceMap::from_fractions(P::y(), P(Rational(1)), P::y(), P::x()));
  CHECK_THROWS_AS(orbit(f, {kPi, kPi}, 3), Error);
  CHECK_NOTHROW(orbit(f, {1.0, 2.0}, 1));
}

TEST_CASE("orbit of f_{1000,alpha} shadows the rotation") {
  NumericMap f(build_fn_theta({1000, 1, kT1, kT2})), r(build_rotation(kT1, kT2));
  TorusPoint seed{1.234, 4.321};
  auto a = orbit(f, seed, 1000), b = orbit(r, seed, 1000);
  double worst = 0.0;
  for (int k = 0; k <= 1000; ++k) worst = std::max(worst, torus_distance(a.point(k), b.point(k)));
  MESSAGE("max deviation over 1000 steps: " << worst);
  CHECK(worst < 0.02);
}

TEST_CASE("rotation_vector") {
  NumericMap r(build_rotation(kT1, kT2));
  auto rv = rotation_vector(orbit(r, {0.5, 0.5}, 1000));
  CHECK(rv.rho1 == doctest::Approx(theta(kT1)).epsilon(1e-12));
  CHECK(rv.rho2 == doctest::Approx(theta(kT2)).epsilon(1e-12));

  double last = INFINITY;
  for (int n : {100, 1000, 10000}) {
    NumericMap f(build_fn_theta({n, 1, kT1, kT2}));
    auto v = rotation_vector(orbit(f, {0.5, 0.5}, 4000));
    double gap = std::max(std::abs(v.rho1 - theta(kT1)), std::abs(v.rho2 - theta(kT2)));
    CHECK(gap < last);
    last = gap;
  }

  NumericMap id(SurfaceMap::identity());
  auto still = rotation_vector(orbit(id, {2.0, 3.0}, 200));
  CHECK(still.rho1 == 0.0);
  CHECK(still.rho2 == 0.0);
  CHECK_THROWS_AS(rotation_vector(orbit(id, {2.0, 3.0}, 50)), Error);
}

TEST_CASE("fixed_point_census") {
  auto rot = fixed_point_census(NumericMap(build_rotation(kT1, kT2)), 32);
  CHECK(rot.points.empty());
  CHECK(rot.lefschetz_consistent);
  CHECK_FALSE(rot.degenerate_identity);

  auto f = fixed_point_census(NumericMap(build_fn_theta({2, 1, kT1, kT2})), 32);
  CHECK(f.points.empty());
  CHECK(f.lefschetz_consistent);

  auto half = fixed_point_census(NumericMap(build_rotation(0, 1)), 16);
  CHECK(half.degenerate_identity);
  CHECK(half.identity_factor[0]);
  CHECK_FALSE(half.identity_factor[1]);

  CHECK_THROWS_AS(fixed_point_census(NumericMap(SurfaceMap::identity()), 8), Error);
}

TEST_CASE("census on a finite-order rotation and its identity power") {
  auto q = build_rotation(1, 1);  // quarter turns
  auto q4 = compose(q, compose(q, compose(q, q)));
  REQUIRE(is_identity(q4));
  auto c4 = fixed_point_census(NumericMap(q4), 16);
  CHECK(c4.degenerate_identity);
  CHECK(c4.identity_factor[0]);
  CHECK(c4.identity_factor[1]);
  CHECK(fixed_point_census(NumericMap(q), 16).points.empty());
}

TEST_CASE("census finds an elliptic fixed point") {
  // (y, -x) is a quarter turn of the plane; on the torus it fixes the points
  // with x = y = -x, i.e. (0, 0) and (oo, oo).
  auto f = SurfaceMap::from_fractions(P::y(), P(Rational(1)), -P::x(), P(Rational(1)));
  auto c = fixed_point_census(NumericMap(f), 32);
  CHECK(c.points.size() == 2);
  for (const auto& p : c.points) {
    CHECK(p.det_df_minus_id > 0);
    CHECK(p.kind == FixedPointKind::RotationLike);
  }
  // chi(T^2) = 0 but two positive-index points appear: the map is not
  // isotopic to the identity, and the census says so.
  CHECK_FALSE(c.lefschetz_consistent);
}

TEST_CASE("sup_distance") {
  NumericMap r(build_rotation(kT1, kT2));
  CHECK(sup_distance(r, r, 32) == 0.0);
  NumericMap swap(SurfaceMap::swap());
  double prev = 0.0;
  for (int n : {10, 100, 1000}) {
    double s = sup_distance(NumericMap(build_gn(n, 1)), swap, 64);
    if (prev > 0) {
      CHECK(prev / s > 10.0 / 3);
      CHECK(prev / s < 30.0);
    }
    prev = s;
  }
  CHECK(sup_distance(NumericMap(build_fn_theta({1000, 1, kT1, kT2})), r, 256) < 0.05);
}

TEST_CASE("diophantine_check") {
  auto good = diophantine_check({2 * kPi * (std::sqrt(2.0) - 1), 2 * kPi * (std::sqrt(3.0) - 1)}, 2, 100);
  CHECK(good.c_emp > 0);
  CHECK(good.resonances.empty());
  auto [k1, k2, k3] = good.argmin;
  int norm = std::max({std::abs(k1), std::abs(k2), std::abs(k3)});
  double direct = std::abs(k1 * good.alpha[0] + k2 * good.alpha[1] + 2 * kPi * k3) * norm * norm;
  CHECK(direct == doctest::Approx(good.c_emp));

  auto pp = diophantine_check({kPi, kPi}, 2, 20);
  CHECK(pp.c_emp == 0.0);
  std::array<int, 3> predicted{1, 1, -1};
  CHECK(std::find(pp.resonances.begin(), pp.resonances.end(), predicted) != pp.resonances.end());

  auto eq = diophantine_check({0.7, 0.7}, 2, 20);
  CHECK(eq.c_emp == 0.0);
  CHECK(eq.resonances == std::vector<std::array<int, 3>>{{1, -1, 0}});
  CHECK_THROWS_AS(diophantine_check({1, 2}, 2, 0), Error);
}

TEST_CASE("property: diophantine constant is monotone in the range") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  for (int trial = 0; trial < 10; ++trial) {
    std::array<double, 2> a{u(rng), u(rng)};
    double prev = INFINITY;
    for (int K : {5, 10, 20, 40}) {
      double c = diophantine_check(a, 2, K).c_emp;
      CHECK(c <= prev);
      prev = c;
    }
  }
}

TEST_CASE("property: real seeds stay real in exact arithmetic") {
  auto f = build_fn_theta({3, 1, kT1, kT2});
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  NumericMap nf(f);
  for (int trial = 0; trial < 10; ++trial) {
    Rational x0(num(rng), den(rng)), y0(num(rng), den(rng));
    x0.canonicalize();
    y0.canonicalize();
    GaussRational x(x0), y(y0);
    HomPoint h{1.0, x0.get_d(), 1.0, y0.get_d()};
    const GaussRational one(1);
    for (int step = 0; step < 5; ++step) {
      GaussRational nx = f.first().num(one, x, one, y) / f.first().den(one, x, one, y);
      GaussRational ny = f.second().num(one, x, one, y) / f.second().den(one, x, one, y);
      x = nx;
      y = ny;
      CHECK(is_zero(x.im));
      CHECK(is_zero(y.im));
      h = nf(h);
      if (step < 3) {
        // The float evaluator tracks the exact orbit.
        CHECK(std::abs(h[1] / h[0] - x.re.get_d()) < 1e-9 * (1 + std::abs(x.re.get_d())));
        CHECK(std::abs(h[3] / h[2] - y.re.get_d()) < 1e-9 * (1 + std::abs(y.re.get_d())));
      }
    }
  }
}

TEST_CASE("property: lift increments survive finer sampling") {
  // f = R o g^2; splitting each step at g^2 never changes an increment by 2 pi.
  for (int n : {10, 1000}) {
    auto g = build_gn(n, 1);
    NumericMap g2(compose(g, g)), r(build_rotation(kT1, kT2)), f(build_fn_theta({n, 1, kT1, kT2}));
    auto o = orbit(f, {0.3, 2.9}, 300);
    for (int k = 0; k < 300; ++k) {
      TorusPoint p = o.point(k), mid = g2.on_torus(p), end = r.on_torus(mid);
      double fine1 = wrap_angle(mid.phi1 - p.phi1) + wrap_angle(end.phi1 - mid.phi1);
      double fine2 = wrap_angle(mid.phi2 - p.phi2) + wrap_angle(end.phi2 - mid.phi2);
      CHECK(std::abs(fine1 - (o.lifts[k + 1][0] - o.lifts[k][0])) < 1e-9);
      CHECK(std::abs(fine2 - (o.lifts[k + 1][1] - o.lifts[k][1])) < 1e-9);
    }
  }
}

TEST_CASE("property: sup distance to the rotation is nonincreasing in n") {
  NumericMap r(build_rotation(kT1, kT2));
  double prev = INFINITY;
  for (int n : {10, 100, 1000, 10000}) {
    double s = sup_distance(NumericMap(build_fn_theta({n, 1, kT1, kT2})), r, 64);
    CHECK(s <= prev);
    prev = s;
  }
}

TEST_CASE("complex_probe") {
  auto f = build_fn_theta({1000, 1, kT1, kT2});
  ProbeOptions real;
  real.offset = 0.0;
  real.seeds = 5;
  real.steps = 500;
  auto r0 = complex_probe(f, real);
  CHECK(r0.all_bounded);
  CHECK(r0.max_drift == 0.0);

  ProbeOptions near;
  near.seeds = 10;
  near.steps = 1000;
  auto r1 = complex_probe(f, near);
  CHECK(r1.all_bounded);
  CHECK(r1.max_drift < 0.01);
  CHECK(r1.trace.size() == 2000);

  ProbeOptions far;
  far.offset = 10;
  far.seeds = 40;
  far.steps = 1000;
  CHECK_FALSE(complex_probe(f, far).all_bounded);
}

TEST_CASE("CSV emitters") {
  NumericMap r(build_rotation(1, 0));
  std::ostringstream os;
  write_orbit_csv(os, orbit(r, {0.0, 0.0}, 2));
  CHECK(os.str() ==
        "step,phi1,phi2,lift1,lift2\n"
        "0,0.000000000000e+00,0.000000000000e+00,0.000000000000e+00,0.000000000000e+00\n"
        "1,1.570796326795e+00,0.000000000000e+00,1.570796326795e+00,0.000000000000e+00\n"
        "2,3.141592653590e+00,0.000000000000e+00,3.141592653590e+00,0.000000000000e+00\n");
  ProbeOptions o;
  o.seeds = 1;
  o.steps = 3;
  std::ostringstream ps;
  write_probe_csv(ps, complex_probe(build_fn_theta({2, 1, kT1, kT2}), o));
  std::string text = ps.str();
  CHECK(text.rfind("step,im_x,im_y,dist_to_ind\n-3,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
}

#include <cmath>
#include <numbers>
#include <random>

#include "biratio/constructions.hpp"
#include "doctest.h"

using namespace biratio;
using P = BiPoly<Rational>;
using U = UPoly<Rational>;

namespace {

std::vector<Complex> values(const std::vector<NumericRoot>& roots) {
  std::vector<Complex> out;
  for (const auto& r : roots) out.push_back(r.value);
  return out;
}

double set_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (const auto& [from, to] : {std::pair{&a, &b}, std::pair{&b, &a}})
    for (const auto& z : *from) {
      double best = INFINITY;
      for (const auto& w : *to) best = std::min(best, std::abs(z - w));
      worst = std::max(worst, best);
    }
  return worst;
}

Complex cayley(Complex x) { return (x - Complex(0, 1)) / (x + Complex(0, 1)); }

Complex eval_coordinate(const MapCoordinate& c, Complex x, Complex y) {
  const Complex one(1.0, 0.0);
  return c.num(one, x, one, y) / c.den(one, x, one, y);
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  Rational rational() {
    Rational q(std::uniform_int_distribution<int>(-12, 12)(rng), std::uniform_int_distribution<int>(1, 9)(rng));
    q.canonicalize();
    return q;
  }
};

}  // namespace

TEST_CASE("build_Fn examples") {
  auto f = build_Fn(2, 1);
  CHECK(f.numerator == U(std::vector<Rational>{1, 1, 1}));
  CHECK(f.denominator == U(std::vector<Rational>{1, 0, 1}));
  CHECK(f.coprime);
  CHECK(f.simple_zeros);
  CHECK(f.simple_poles);
  CHECK(f.real_zeros == 0);
  const double s = std::sqrt(3.0) / 2;
  CHECK(set_distance(values(f.zeros), {{-0.5, s}, {-0.5, -s}}) < 1e-12);
  CHECK(set_distance(values(f.poles), {{0, 1}, {0, -1}}) < 1e-12);

  CHECK_THROWS_AS(build_Fn(1, 1), Error);
  auto bad = analyze_Fn(1, 1);
  CHECK_FALSE(bad.simple_zeros);
  CHECK(bad.real_zeros == 1);  // (x + 1)^2
  CHECK_THROWS_AS(build_Fn(0, 1), Error);

  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 4; ++d) {
      auto fn = build_Fn(n, d);
      CHECK(set_distance(values(fn.poles), poles_closed_form(d)) < 1e-12);
      CHECK(set_distance(values(fn.zeros), zeros_factored_form(n, d)) < 1e-12);
    }
}

TEST_CASE("displayed zero formula misses the computed zeros by a rotation") {
  // Displayed: e^{+-i pi/3} at n = 2, d = 1; the numerator x^2 + x + 1 has
  // e^{+-2 pi i/3}.
  auto fn = build_Fn(2, 1);
  CHECK(set_distance(values(fn.zeros), zeros_displayed_form(2, 1)) > 0.5);
  // x -> -x maps one onto the other when d = 1.
  std::vector<Complex> flipped;
  for (auto z : zeros_displayed_form(2, 1)) flipped.push_back(-z);
  CHECK(set_distance(values(fn.zeros), flipped) < 1e-12);
}

TEST_CASE("count_real_roots") {
  CHECK(count_real_roots(U(std::vector<Rational>{-1, 0, 1})) == 2);
  CHECK(count_real_roots(U(std::vector<Rational>{1, 0, 1})) == 0);
  CHECK(count_real_roots(U(std::vector<Rational>{0, -2, 0, 1})) == 3);
}

TEST_CASE("build_gn") {
  for (int d = 1; d <= 3; ++d) {
    auto g = build_gn(2, d);
    CHECK(bidegree_matrix(g) == herman_matrix(d));
    CHECK(is_identity(compose(g, g.inverse())));
  }
  auto g = build_gn(2, 1);
  auto fn = build_Fn(2, 1);
  auto Z = values(fn.zeros), Pl = values(fn.poles);
  CHECK(hausdorff_distance(indeterminacy_set(g).points, ind_gn_closed(Z, Pl)) < 1e-10);
  CHECK(hausdorff_distance(indeterminacy_set(g.inverse()).points, ind_gn_inverse_closed(Z, Pl)) < 1e-10);
}

TEST_CASE("build_rotation") {
  CHECK(is_identity(build_rotation(0, 0)));
  auto r = build_rotation(Rational(1, 3), Rational(-7, 2));
  CHECK(bidegree_matrix(r) == make_bidegree(1, 0, 0, 1));
  CHECK(is_identity(compose(r, r.inverse())));
  CHECK(r.inverse() == build_rotation(Rational(-1, 3), Rational(7, 2)));

  // t = (1, 0): a quarter turn on the first circle, nothing on the second.
  auto q = build_rotation(1, 0);
  const Complex turn = std::polar(1.0, std::numbers::pi / 2);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    double a = 2 * std::numbers::pi * (k + 0.5) / 1000, b = 0.37 + a;
    Complex x = std::tan(a / 2), y = std::tan(b / 2);
    Complex fx = eval_coordinate(q.first(), x, y), fy = eval_coordinate(q.second(), x, y);
    worst = std::max(worst, std::abs(cayley(fx) - turn * cayley(x)));
    worst = std::max(worst, std::abs(cayley(fy) - cayley(y)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("build_fn_theta") {
  HermanFamilyParams p{2, 1, Rational(1, 3), Rational(2, 5)};
  auto f = build_fn_theta(p);
  CHECK(bidegree_matrix(f) == make_bidegree(5, 2, 2, 1));
  CHECK(is_identity(compose(f, f.inverse())));
  auto g = build_gn(2, 1);
  CHECK(build_fn_theta({2, 1, 0, 0}) == compose(g, g));
  auto lambda = leading_eigenvalue(1);
  CHECK(deg_ample(f, eigen_class(1)) == QuadExt(Rational(2)) * lambda * lambda * lambda);
}

TEST_CASE("verify_theorem at d = 1") {
  auto r = verify_theorem({2, 1, Rational(1, 3), Rational(2, 5)});
  CHECK(r.symbolic);
  CHECK(r.failures.empty());
  CHECK(r.disjoint);
  CHECK(r.all_nonreal);
  REQUIRE(r.xie);
  CHECK(r.xie->status == XieStatus::Inconclusive);
  REQUIRE(r.ind_f);
  CHECK(r.ind_f->matching == "factored");
  CHECK(r.ind_f->factored_distance < 1e-10);
  CHECK(r.ind_f->discrepancies.empty());
  REQUIRE(r.ind_f_inverse);
  CHECK(r.ind_f_inverse->matching == "factored");
  CHECK(r.degree_identities);
  CHECK(r.poles_antipode_stable);
  CHECK(r.theta1 == doctest::Approx(2 * std::atan(1.0 / 3)));
  CHECK(r.epsilon == doctest::Approx(std::numbers::pi - 2 * std::atan(1.0 / 3)));
}

TEST_CASE("verify_theorem at d = 16552 uses the matrix path") {
  auto r = verify_theorem({2, 16552, Rational(1, 3), Rational(2, 5)});
  CHECK_FALSE(r.symbolic);
  CHECK(r.disjoint);
  CHECK(r.all_nonreal);
  REQUIRE(r.xie);
  CHECK(r.xie->status == XieStatus::Certified);
  CHECK(r.xie->bound_enclosure.first > 1);
  CHECK(r.degree_identities);
  CHECK(r.failures.empty());
}

TEST_CASE("antipodal stability of poles and zeros") {
  for (int d = 1; d <= 6; ++d) {
    auto fn = build_Fn(3, d);
    CHECK(stable_under_antipode(fn.denominator));
    // x^2d p(-1/x) = x^2d + (-1)^d (2/n) x^d + 1.
    CHECK(stable_under_antipode(fn.numerator) == (d % 2 == 0));
  }
  auto orbits = check_rotation_orbits(64, 2048);
  CHECK(orbits.two_crossings);
  CHECK(orbits.max_mismatch < 1e-9);
}

TEST_CASE("closed-form separation is positive and shrinks near theta = pi") {
  double near = closed_form_separation(2, 1, 1e6, 0.3);
  double far = closed_form_separation(2, 1, 0.3, 0.3);
  CHECK(far > 0);
  CHECK(near < far);
}

TEST_CASE("property: Ind(f) and Ind(f^-1) are disjoint on the small grid") {
  Gen gen(41);
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      // d = 3 costs seconds per instance, so it gets fewer parameter pairs.
      int pairs = d < 3 ? 20 : 4;
      auto fn = build_Fn(n, d);
      auto Z = values(fn.zeros), Pl = values(fn.poles);
      for (int k = 0; k < pairs; ++k) {
        HermanFamilyParams p{n, d, gen.rational(), gen.rational()};
        auto f = build_fn_theta(p);
        CHECK(bidegree_matrix(f) == matrix_power(herman_matrix(d), 2));
        CHECK(ind_disjoint(f).disjoint);
        if (k < 2) {
          CHECK(hausdorff_distance(indeterminacy_set(f).points, ind_fn_theta_closed(Z, Pl)) < 1e-10);
          CHECK(hausdorff_distance(indeterminacy_set(f.inverse()).points,
                                   ind_fn_theta_inverse_closed(Z, Pl, p.t1.get_d(), p.t2.get_d())) < 1e-10);
        }
      }
    }
}

TEST_CASE("property: bidegree of f^2 is A^4 at d = 1") {
  Gen gen(43);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 3; ++k) {
      auto f = build_fn_theta({n, 1, gen.rational(), gen.rational()});
      CHECK(bidegree_matrix(compose(f, f)) == matrix_power(herman_matrix(1), 4));
    }
}

TEST_CASE("property: degree identities hold exactly") {
  for (long d : {1L, 2L, 3L, 16552L}) {
    auto L = eigen_class(d);
    auto l = leading_eigenvalue(d);
    auto a = herman_matrix(d);
    QuadExt two(Rational(2));
    CHECK(deg_ample(matrix_power(a, 2), L) == two * l * l * l);
    CHECK(deg_ample(matrix_power(a, 4), L) == two * l * l * l * l * l);
    CHECK(self_intersection(L) == two * l);
  }
}

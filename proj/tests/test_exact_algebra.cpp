#include <random>

#include "biratio/bihom.hpp"
#include "biratio/bipoly.hpp"
#include "biratio/gauss_rational.hpp"
#include "biratio/quad_ext.hpp"
#include "doctest.h"

using namespace biratio;
using P = BiPoly<Rational>;

namespace {

const P X = P::x();
const P Y = P::y();
P c(long v) { return P(Rational(v)); }

struct Gen {
  std::mt19937_64 rng{20240611};

  Rational rational(int span = 9) {
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  }
  P poly(int max_deg = 2, int terms = 3) {
    std::uniform_int_distribution<int> e(0, max_deg);
    P p;
    for (int k = 0; k < terms; ++k) p += P::monomial(rational(), e(rng), e(rng));
    return p;
  }
  QuadExt quad(const Integer& d) { return QuadExt(d, rational(50), rational(50)); }
  GaussRational gauss() { return {rational(), rational()}; }
};

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/x"), Error);
  CHECK(exact_rational(0.375) == Rational(3, 8));
}

TEST_CASE("poly_gcd examples") {
  CHECK(gcd(X * X - c(1), X - c(1)) == X - c(1));
  // x^2+x+1 = 1*(x^2+1) + x;  x^2+1 = x*x + 1;  x = x*1 + 0.
  CHECK(gcd(X * X + X + c(1), X * X + c(1)) == c(1));
  P p = c(6) * X * Y - c(4) * Y;
  CHECK(gcd(p, P()) == normalize(p));
  CHECK(normalize(p) == c(3) * X * Y - c(2) * Y);
  // A shared factor that involves both variables.
  P r = X * Y + c(2) * Y * Y - c(1);
  CHECK(gcd((X - Y) * r, (X + c(3)) * r * r) == r);
}

TEST_CASE("poly_gcd over Q(i)") {
  using G = BiPoly<GaussRational>;
  G x = G::x();
  G i(GaussRational::i());
  G a = (x - i) * (x + G(GaussRational(1)));
  G b = (x - i) * (x - G(GaussRational(2)));
  CHECK(gcd(a, b) == x - i);
}

TEST_CASE("bihomogenize examples") {
  auto g = bihomogenize((X * X + X + c(1)) * Y, X * X + c(1));
  CHECK(g.bidegree() == std::pair{2, 1});
  CHECK(g.num.poly == (X * X + X + c(1)) * Y);
  CHECK(g.den.poly == X * X + c(1));  // (x1^2 + x0^2) y0: the y0 is implicit
  auto id = bihomogenize(X, c(1));
  CHECK(id.bidegree() == std::pair{1, 0});
  CHECK(id.num.poly == X);
  CHECK(id.den.poly == c(1));
  auto five = bihomogenize(c(5), c(1));
  CHECK(five.bidegree() == std::pair{0, 0});
  CHECK(five.num.poly == c(5));
  CHECK(five.den.poly == c(1));
  CHECK_THROWS_AS(bihomogenize(X, P()), Error);
  // Common factors, including ones only visible projectively, are removed.
  auto cancelled = bihomogenize((X - c(1)) * X, (X - c(1)) * Y);
  CHECK(cancelled.bidegree() == std::pair{1, 1});
  CHECK(cancelled.num.poly == X);
  CHECK(cancelled.den.poly == Y);
}

TEST_CASE("resultant examples") {
  auto r = resultant(X * X + c(1), X - c(2), Var::x);
  CHECK(r == c(5));
  P p = X * X * Y + X - c(3);
  CHECK(resultant(p, p, Var::x).zero());
  // Standard sign convention gives 1 - x^2; it vanishes exactly at x = +-1.
  auto ry = resultant(X * Y - c(1), Y - X, Var::y);
  CHECK(normalize(ry) == X * X - c(1));
  CHECK_THROWS_AS(resultant(P(), P(), Var::x), Error);
}

TEST_CASE("univariate resultant matches the Sylvester product formula") {
  using U = UPoly<Rational>;
  // (x-1)(x-2) and (x-3): Res = prod over roots of A of B = (1-3)(2-3) = 2.
  U a({Rational(2), Rational(-3), Rational(1)});
  U b({Rational(-3), Rational(1)});
  CHECK(resultant(a, b) == 2);
  CHECK(resultant(b, a) == 2);  // (-1)^(2*1)
  U cst(Rational(3));
  CHECK(resultant(cst, a) == 9);
}

TEST_CASE("quad_cmp examples") {
  QuadExt two_plus_root5 = QuadExt(5, 2, 1);
  CHECK(quad_cmp(two_plus_root5, QuadExt(Rational(17, 4))) == std::strong_ordering::less);
  CHECK(quad_cmp(two_plus_root5, two_plus_root5) == std::strong_ordering::equal);
  // sqrt(2) < 3/2 since 2 < 9/4.
  CHECK(quad_cmp(QuadExt(2, 1, 1), QuadExt(Rational(5, 2))) == std::strong_ordering::less);
  CHECK_THROWS_AS(quad_cmp(QuadExt(2, 0, 1), QuadExt(3, 0, 1)), Error);
  auto r50 = QuadExt::sqrt_of(50);
  CHECK(r50.radicand() == 2);
  CHECK(r50.surd_part() == 5);
  CHECK(QuadExt::sqrt_of(49).is_rational());
}

TEST_CASE("quad enclosure is rigorous") {
  QuadExt v(2, Rational(1, 3), Rational(-7, 5));
  auto [lo, hi] = v.enclosure(20);
  CHECK(lo <= hi);
  CHECK(QuadExt(lo) <= v);
  CHECK(v <= QuadExt(hi));
  CHECK(hi - lo <= Rational(2, 100000000) * Rational(Integer(1), Integer("1000000000000")));
}

TEST_CASE("field axioms hold on random elements") {
  Gen g;
  Integer d = 13;
  for (int k = 0; k < 200; ++k) {
    auto a = g.gauss(), b = g.gauss(), cc = g.gauss();
    CHECK((a + b) + cc == a + (b + cc));
    CHECK(a * (b + cc) == a * b + a * cc);
    CHECK(a.conj().conj() == a);
    if (!is_zero(a)) {
      CHECK(a * a.inverse() == GaussRational(1));
      CHECK(sgn(a.norm()) > 0);
    }
    auto u = g.quad(d), v = g.quad(d), w = g.quad(d);
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * (v + w) == u * v + u * w);
    if (u.sign() != 0) CHECK(u * u.inverse() == QuadExt(Rational(1)));
  }
}

TEST_CASE("gcd(p r, q r) = r gcd(p, q) up to a unit") {
  Gen g;
  for (int k = 0; k < 40; ++k) {
    P p = g.poly(), q = g.poly(), r = g.poly(2, 2);
    if (p.zero() || q.zero() || r.zero()) continue;
    CHECK(gcd(p * r, q * r) == normalize(r * gcd(p, q)));
  }
}

TEST_CASE("bihomogenize dehomogenizes back to num/den") {
  Gen g;
  for (int k = 0; k < 40; ++k) {
    P n = g.poly(3, 3), d = g.poly(3, 3);
    if (d.zero()) continue;
    auto pair = bihomogenize(n, d);
    CHECK(pair.num.poly * d == pair.den.poly * n);
    CHECK(gcd(pair.num.poly, pair.den.poly).total_degree() <= 0);
  }
}

TEST_CASE("resultant vanishing agrees with a univariate gcd oracle") {
  Gen g;
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    // Plant shared roots half of the time.
    P shared = X - Y * Y + c(k % 3);
    P p = g.poly(2, 3) + X, q = g.poly(2, 3) - X;
    if (k % 2 == 0) {
      p = p * shared;
      q = q * shared;
    }
    if (p.deg_x() < 1 || q.deg_x() < 1) continue;
    auto res = resultant(p, q, Var::x).univariate(Var::y);
    auto lp = p.recursive(Var::x).lead(), lq = q.recursive(Var::x).lead();
    for (int y0 = -3; y0 <= 3; ++y0) {
      Rational at(y0);
      if (is_zero(lp(at)) && is_zero(lq(at))) continue;
      auto oracle = gcd_field(p.specialize(Var::y, at), q.specialize(Var::y, at));
      CHECK(is_zero(res(at)) == (oracle.degree() >= 1));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("quad_cmp agrees with 100-digit floating evaluation") {
  Gen g;
  const unsigned bits = 400;
  for (int k = 0; k < 1000; ++k) {
    Integer d = (k % 2) ? Integer(273968705) : Integer(5 + k % 7 * 2);
    QuadExt u = g.quad(d), v = g.quad(d);
    if (k % 10 == 0) v = u + QuadExt(Rational(1, 1000000007));  // near ties
    auto eval = [&](const QuadExt& q) {
      mpf_class root(0, bits), out(0, bits);
      mpf_class dd(q.radicand(), bits);
      mpf_sqrt(root.get_mpf_t(), dd.get_mpf_t());
      out = mpf_class(q.rational_part(), bits) + mpf_class(q.surd_part(), bits) * root;
      return out;
    };
    int want = cmp(eval(u), eval(v));
    auto got = quad_cmp(u, v);
    int got_i = got < 0 ? -1 : (got > 0 ? 1 : 0);
    CHECK(got_i == (want > 0) - (want < 0));
  }
}

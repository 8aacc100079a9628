#include "biratio/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace biratio {

namespace {

using UQ = UPoly<Rational>;
using BQ = BiPoly<Rational>;

UQ monomial(long c_num, long c_den, int k) { return UQ::monomial(make_rational(c_num, c_den), k); }

// Above this d the zero/pole analysis runs on q(u) with u = x^d.
constexpr int kDenseMaxD = 64;

// Distinct real roots of p(x) = q(x^d), counted from q alone.
int real_roots_of_power(const UQ& q, int d) {
  if (d % 2 == 1) return count_real_roots(q);
  std::vector<Rational> sq(2 * q.coeffs().size() - 1);
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) sq[2 * i] = q.coeffs()[i];
  // Real roots of q(v^2) come in pairs +-v for u > 0, plus v = 0 when q(0) = 0.
  return count_real_roots(UQ(sq));
}

// Roots of q(x^d) as d-th roots of the roots of q, with the inclusion radius
// deg * |p / p'| evaluated in long double.
std::vector<NumericRoot> roots_of_power(const UQ& q, int d) {
  using CL = std::complex<long double>;
  std::vector<NumericRoot> out;
  const long double pi = std::numbers::pi_v<long double>;
  for (const auto& u : polynomial_roots(q)) {
    CL uu(u.value.real(), u.value.imag());
    long double r = std::pow(std::abs(uu), 1.0L / d), arg = std::arg(uu);
    for (int k = 0; k < d; ++k) {
      CL x = std::polar(r, (arg + 2 * pi * k) / d);
      CL xd = std::pow(x, d);
      CL p(0), dp(0), pw(1);
      for (int i = 0; i <= q.degree(); ++i) {
        long double c = q.coeffs()[i].get_d();
        p += c * pw;
        if (i > 0) dp += static_cast<long double>(i) * c * pw / xd;
        pw *= xd;
      }
      dp *= static_cast<long double>(d) * xd / x;
      long double radius = dp == CL(0) ? INFINITY : static_cast<long double>(q.degree() * d) * std::abs(p / dp);
      out.push_back({Complex(static_cast<double>(x.real()), static_cast<double>(x.imag())),
                     static_cast<double>(radius)});
    }
  }
  return out;
}

BQ in_var(const UQ& p, Var v) { return BQ::from_univariate(p, v); }

void require_positive(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::Usage, "n and d must be positive");
}

int sign_at_infinity(const UQ& p, bool positive) {
  int s = sgn(p.lead());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

IndPoint point(P1Point x, P1Point y) {
  IndPoint p;
  p.x = x;
  p.y = y;
  return p;
}

void add_product(std::vector<IndPoint>& out, const std::vector<P1Point>& xs, const std::vector<P1Point>& ys) {
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(point(x, y));
}

std::vector<P1Point> finite(const std::vector<Complex>& zs) {
  std::vector<P1Point> out;
  for (auto z : zs) out.push_back(P1Point::at(z));
  return out;
}

const std::vector<P1Point> kZero{P1Point::at(0.0)};
const std::vector<P1Point> kInf{P1Point::infinity()};

double min_distance(const std::vector<P1Point>& a, const std::vector<P1Point>& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : a)
    for (const auto& q : b) best = std::min(best, chordal_distance(p, q));
  return best;
}

std::vector<P1Point> rotated(const std::vector<P1Point>& pts, double t) {
  std::vector<P1Point> out;
  for (const auto& p : pts) out.push_back(rotate_point(p, t));
  return out;
}

std::vector<std::pair<std::vector<P1Point>, std::vector<P1Point>>> fn_theta_components(
    const std::vector<P1Point>& Z, const std::vector<P1Point>& P) {
  return {{Z, kInf}, {P, kZero}, {kInf, Z}, {kZero, P}};
}

std::vector<std::pair<std::vector<P1Point>, std::vector<P1Point>>> fn_theta_inverse_components(
    const std::vector<P1Point>& Z, const std::vector<P1Point>& P, double t1, double t2) {
  auto r1 = [&](const std::vector<P1Point>& s) { return rotated(s, t1); };
  auto r2 = [&](const std::vector<P1Point>& s) { return rotated(s, t2); };
  return {{r1(kZero), r2(Z)}, {r1(kInf), r2(P)}, {r1(Z), r2(kZero)}, {r1(P), r2(kInf)}};
}

double min_imag(const std::vector<IndPoint>& pts) {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    double ix = p.x.infinite ? 0.0 : std::abs(p.x.value.imag());
    double iy = p.y.infinite ? 0.0 : std::abs(p.y.value.imag());
    worst = std::min(worst, std::max(ix, iy));
  }
  return worst;
}

}  // namespace

int count_real_roots(const UQ& p) {
  if (p.degree() <= 0) return 0;
  UQ s0 = squarefree_part(p), s1 = s0.derivative();
  std::vector<UQ> seq{s0, s1};
  while (seq.back().degree() > 0) {
    UQ r = divrem(seq[seq.size() - 2], seq.back()).second;
    if (r.zero()) break;
    seq.push_back(-r);
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& q : seq) {
    at_neg.push_back(sign_at_infinity(q, false));
    at_pos.push_back(sign_at_infinity(q, true));
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

FnData analyze_Fn(int n, int d) {
  require_positive(n, d);
  FnData out;
  out.numerator = monomial(1, 1, 2 * d) + monomial(2, n, d) + monomial(1, 1, 0);
  out.denominator = monomial(1, 1, 2 * d) + monomial(1, 1, 0);
  if (d > kDenseMaxD) {
    // x^d = u is unramified away from u = 0, so q(x^d) inherits simplicity
    // and coprimality from q when q(0) != 0.
    const UQ qn = monomial(1, 1, 2) + monomial(2, n, 1) + monomial(1, 1, 0);
    const UQ qd = monomial(1, 1, 2) + monomial(1, 1, 0);
    out.coprime = gcd_field(qn, qd).degree() == 0;
    out.simple_zeros = gcd_field(qn, qn.derivative()).degree() == 0;
    out.simple_poles = gcd_field(qd, qd.derivative()).degree() == 0;
    out.real_zeros = real_roots_of_power(qn, d);
    out.real_poles = real_roots_of_power(qd, d);
    out.zeros = roots_of_power(qn, d);
    out.poles = roots_of_power(qd, d);
    return out;
  }
  out.coprime = gcd_field(out.numerator, out.denominator).degree() == 0;
  out.simple_zeros = gcd_field(out.numerator, out.numerator.derivative()).degree() == 0;
  out.simple_poles = gcd_field(out.denominator, out.denominator.derivative()).degree() == 0;
  out.real_zeros = count_real_roots(out.numerator);
  out.real_poles = count_real_roots(out.denominator);
  out.zeros = polynomial_roots(out.numerator);
  out.poles = polynomial_roots(out.denominator);
  return out;
}

FnData build_Fn(int n, int d) {
  FnData out = analyze_Fn(n, d);
  if (!out.simple_zeros || !out.simple_poles || !out.coprime)
    throw Error(ErrorKind::SimplicityViolation,
                "F_n has a repeated zero or pole for n=" + std::to_string(n) + ", d=" + std::to_string(d));
  if (out.real_zeros > 0 || out.real_poles > 0)
    throw Error(ErrorKind::RealRootDetected,
                "F_n has a real zero or pole for n=" + std::to_string(n) + ", d=" + std::to_string(d));
  return out;
}

SurfaceMap build_gn(int n, int d) {
  FnData fn = build_Fn(n, d);
  const BQ x = BQ::x(), y = BQ::y(), one(Rational(1));
  SurfaceMap g = SurfaceMap::from_fractions(in_var(fn.numerator, Var::x) * y, in_var(fn.denominator, Var::x), x, one);
  SurfaceMap inv = SurfaceMap::from_fractions(y, one, x * in_var(fn.denominator, Var::y), in_var(fn.numerator, Var::y));
  return g.with_inverse(inv);
}

SurfaceMap build_rotation(const Rational& t1, const Rational& t2) {
  const BQ x = BQ::x(), y = BQ::y(), one(Rational(1));
  auto make = [&](const Rational& a, const Rational& b) {
    return SurfaceMap::from_fractions(x + BQ(a), one - x * a, y + BQ(b), one - y * b);
  };
  return make(t1, t2).with_inverse(make(-t1, -t2));
}

SurfaceMap build_fn_theta(const HermanFamilyParams& p) {
  SurfaceMap g = build_gn(p.n, p.d);
  return compose(build_rotation(p.t1, p.t2), compose(g, g));
}

BidegreeMatrix herman_matrix(long d) { return make_bidegree(2 * d, 1, 1, 0); }

QuadExt leading_eigenvalue(long d) {
  Integer dd(d);
  return QuadExt(dd * dd + 1, Rational(dd), Rational(1));
}

AmpleClass eigen_class(long d) { return AmpleClass(leading_eigenvalue(d), QuadExt(Rational(1))); }

std::vector<Complex> poles_closed_form(int d) {
  std::vector<Complex> out;
  for (int k = 0; k < d; ++k)
    for (double s : {1.0, -1.0}) out.push_back(std::polar(1.0, (s * std::numbers::pi / 2 + 2 * k * std::numbers::pi) / d));
  return out;
}

std::vector<Complex> zeros_displayed_form(int n, int d) {
  std::vector<Complex> out;
  const double a = std::acos(1.0 / n);
  for (int k = 0; k < d; ++k)
    for (double s : {1.0, -1.0}) out.push_back(std::polar(1.0, (s * a + 2 * k * std::numbers::pi) / d));
  return out;
}

std::vector<Complex> zeros_factored_form(int n, int d) {
  std::vector<Complex> out;
  const double a = std::acos(1.0 / n);
  for (int k = 0; k < d; ++k)
    for (double s : {1.0, -1.0})
      out.push_back(std::polar(1.0, (std::numbers::pi + s * a + 2 * k * std::numbers::pi) / d));
  return out;
}

P1Point rotate_point(const P1Point& p, double t) {
  if (p.infinite) return t == 0.0 ? P1Point::infinity() : P1Point::at(-1.0 / t);
  Complex den = 1.0 - t * p.value;
  if (std::abs(den) == 0.0) return P1Point::infinity();
  return P1Point::at((p.value + t) / den);
}

std::vector<IndPoint> ind_gn_closed(const std::vector<Complex>& Z, const std::vector<Complex>& P) {
  std::vector<IndPoint> out;
  add_product(out, finite(Z), kInf);
  add_product(out, finite(P), kZero);
  return out;
}

std::vector<IndPoint> ind_gn_inverse_closed(const std::vector<Complex>& Z, const std::vector<Complex>& P) {
  std::vector<IndPoint> out;
  add_product(out, kZero, finite(Z));
  add_product(out, kInf, finite(P));
  return out;
}

std::vector<IndPoint> ind_fn_theta_closed(const std::vector<Complex>& Z, const std::vector<Complex>& P) {
  std::vector<IndPoint> out;
  for (const auto& [xs, ys] : fn_theta_components(finite(Z), finite(P))) add_product(out, xs, ys);
  return out;
}

std::vector<IndPoint> ind_fn_theta_inverse_closed(const std::vector<Complex>& Z, const std::vector<Complex>& P,
                                                  double t1, double t2) {
  std::vector<IndPoint> out;
  for (const auto& [xs, ys] : fn_theta_inverse_components(finite(Z), finite(P), t1, t2)) add_product(out, xs, ys);
  return out;
}

ClosedFormIndReport compare_closed_form(std::vector<IndPoint> computed, std::vector<IndPoint> displayed,
                                        std::vector<IndPoint> factored, double tolerance) {
  ClosedFormIndReport r;
  r.tolerance = tolerance;
  r.displayed_distance = hausdorff_distance(computed, displayed);
  r.factored_distance = hausdorff_distance(computed, factored);
  bool d_ok = r.displayed_distance < tolerance, f_ok = r.factored_distance < tolerance;
  r.matching = d_ok && f_ok ? "both" : d_ok ? "displayed" : f_ok ? "factored" : "neither";
  for (const auto& p : computed) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : factored) best = std::min(best, point_distance(p, q));
    if (best >= tolerance) r.discrepancies.push_back(p);
  }
  r.computed = std::move(computed);
  r.displayed = std::move(displayed);
  r.factored = std::move(factored);
  return r;
}

double closed_form_separation(int n, int d, double t1, double t2) {
  auto Z = finite(zeros_factored_form(n, d)), P = finite(poles_closed_form(d));
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [ax, ay] : fn_theta_components(Z, P)) {
    for (const auto& [bx, by] : fn_theta_inverse_components(Z, P, t1, t2)) {
      // Each component has a one-point factor, so one of the two factor
      // distances is cheap; a set-to-set factor only contributes 0.
      double dx = (ax.size() == 1 || bx.size() == 1) ? min_distance(ax, bx) : 0.0;
      double dy = (ay.size() == 1 || by.size() == 1) ? min_distance(ay, by) : 0.0;
      worst = std::min(worst, std::max(dx, dy));
    }
  }
  return worst;
}

bool stable_under_antipode(const UQ& p) {
  if (p.degree() <= 0) return true;
  const int n = p.degree();
  std::vector<Rational> c(n + 1);
  // x^n p(-1/x) = sum a_k (-1)^k x^(n-k)
  for (int k = 0; k <= n; ++k) c[n - k] = (k % 2 ? Rational(-p.coeff(k)) : p.coeff(k));
  UQ q(std::move(c));
  return q.degree() == n && monic(q) == monic(p);
}

OrbitGeometryCheck check_rotation_orbits(int samples, int theta_grid) {
  OrbitGeometryCheck out;
  out.samples = samples;
  out.two_crossings = true;
  const double pi = std::numbers::pi;
  for (int s = 0; s < samples; ++s) {
    // Avoid +-i: angles offset from pi/2 multiples.
    double phi = 2 * pi * (s + 0.37) / samples;
    Complex x = std::polar(1.0, phi);
    auto gap = [&](double theta) {
      P1Point r = rotate_point(P1Point::at(x), std::tan(theta / 2));
      return r.infinite ? std::numeric_limits<double>::infinity() : std::abs(r.value) - 1.0;
    };
    int crossings = 0;
    const double h = 2 * pi / theta_grid;
    double a = -pi + h / 2, ga = gap(a);
    for (int k = 1; k <= theta_grid; ++k) {
      double b = a + h, gb = gap(b);
      if (std::isfinite(ga) && std::isfinite(gb) && (ga < 0) != (gb < 0)) {
        double lo = a, hi = b, glo = ga;
        for (int it = 0; it < 80; ++it) {
          double mid = (lo + hi) / 2, gm = gap(mid);
          if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
          } else {
            hi = mid;
          }
        }
        P1Point hit = rotate_point(P1Point::at(x), std::tan((lo + hi) / 4));
        double miss = std::min(chordal_distance(hit, P1Point::at(x)), chordal_distance(hit, P1Point::at(-1.0 / x)));
        out.max_mismatch = std::max(out.max_mismatch, miss);
        ++crossings;
      }
      a = b;
      ga = gb;
    }
    if (crossings != 2) out.two_crossings = false;
  }
  return out;
}

TheoremReport verify_theorem(const HermanFamilyParams& p, const VerifyOptions& opts) {
  TheoremReport r;
  r.params = p;
  // Angles in [0, 2 pi).
  auto angle = [](const Rational& t) {
    double a = 2 * std::atan(t.get_d());
    return a < 0 ? a + 2 * std::numbers::pi : a;
  };
  r.theta1 = angle(p.t1);
  r.theta2 = angle(p.t2);
  r.epsilon = std::max(std::abs(std::numbers::pi - r.theta1), std::abs(std::numbers::pi - r.theta2));
  const double t1 = p.t1.get_d(), t2 = p.t2.get_d();
  try {
    r.fn = build_Fn(p.n, p.d);
  } catch (const Error& e) {
    r.fn = analyze_Fn(p.n, p.d);
    r.failures.push_back(std::string("F_n: ") + e.what());
    return r;
  }
  const auto Zd = zeros_displayed_form(p.n, p.d), Zf = zeros_factored_form(p.n, p.d), P = poles_closed_form(p.d);
  r.poles_antipode_stable = stable_under_antipode(r.fn->denominator);
  r.zeros_antipode_stable = stable_under_antipode(r.fn->numerator);
  r.orbit_geometry = check_rotation_orbits(64, 2048);
  if (!r.orbit_geometry->two_crossings || r.orbit_geometry->max_mismatch > 1e-9)
    r.failures.push_back("rotation orbits: unexpected crossing of the unit circle");
  if (!r.poles_antipode_stable) r.failures.push_back("pole set not stable under x -> -1/x");

  r.symbolic = p.d <= opts.symbolic_max_d;
  std::string stability;
  std::vector<IndPoint> ind_f, ind_finv;
  r.closed_form_separation = closed_form_separation(p.n, p.d, t1, t2);
  if (r.symbolic) {
    try {
      SurfaceMap f = build_fn_theta(p);
      r.bidegree = bidegree_matrix(f);
      ind_f = indeterminacy_set(f).points;
      ind_finv = indeterminacy_set(f.inverse()).points;
      r.ind_f = compare_closed_form(ind_f, ind_fn_theta_closed(Zd, P), ind_fn_theta_closed(Zf, P), opts.tolerance);
      r.ind_f_inverse = compare_closed_form(ind_finv, ind_fn_theta_inverse_closed(Zd, P, t1, t2),
                                            ind_fn_theta_inverse_closed(Zf, P, t1, t2), opts.tolerance);
      r.disjointness = ind_disjoint(f);
      r.disjoint = r.disjointness->disjoint;
      stability = "ind_disjoint certificate";
    } catch (const Error& e) {
      r.failures.push_back(std::string("symbolic stage: ") + e.what());
    }
  } else {
    r.bidegree = matrix_power(herman_matrix(p.d), 2);
    ind_f = ind_fn_theta_closed(Zf, P);
    ind_finv = ind_fn_theta_inverse_closed(Zf, P, t1, t2);
    r.disjoint = r.closed_form_separation > opts.tolerance;
    stability = "closed-form separation of Ind(f) and Ind(f^-1) (numeric)";
  }
  if (r.bidegree && *r.bidegree != matrix_power(herman_matrix(p.d), 2))
    r.failures.push_back("bidegree of f differs from A^2");
  if (!r.disjoint) r.failures.push_back("Ind(f) and Ind(f^-1) not shown disjoint");
  r.min_imag_part = std::min(min_imag(ind_f), min_imag(ind_finv));
  r.all_nonreal = !ind_f.empty() && r.min_imag_part > opts.tolerance;
  if (!r.all_nonreal) r.failures.push_back("a real indeterminacy point was found");

  const AmpleClass L = eigen_class(p.d);
  const QuadExt lambda = leading_eigenvalue(p.d);
  const BidegreeMatrix A2 = matrix_power(herman_matrix(p.d), 2), A4 = matrix_power(herman_matrix(p.d), 4);
  QuadExt l2 = lambda * lambda, l3 = l2 * lambda, l5 = l3 * l2;
  r.degree_identities = deg_ample(A2, L) == QuadExt(Rational(2)) * l3 && deg_ample(A4, L) == QuadExt(Rational(2)) * l5 &&
                        self_intersection(L) == QuadExt(Rational(2)) * lambda;
  if (!r.degree_identities) r.failures.push_back("degree identities failed");
  if (r.disjoint) r.xie = xie_from_matrices(A2, A4, L, stability);
  return r;
}

}  // namespace biratio

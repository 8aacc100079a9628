#include "biratio/surface_map.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace biratio {

namespace {

using Form = BiHomForm<Rational>;
using Poly = BiPoly<Rational>;

Form unit_form() { return Form{Poly(Rational(1)), 0, 0}; }

std::vector<Form> powers(const Form& base, int n) {
  std::vector<Form> out;
  out.reserve(n + 1);
  out.push_back(unit_form());
  for (int i = 1; i <= n; ++i) out.push_back(out.back() * base);
  return out;
}

/// Substitutes the coordinates of g into the form p.
Form substitute(const Form& p, const SurfaceMap& g) {
  const auto& g1 = g.first();
  const auto& g2 = g.second();
  auto x0 = powers(g1.den, p.deg_x), x1 = powers(g1.num, p.deg_x);
  auto y0 = powers(g2.den, p.deg_y), y1 = powers(g2.num, p.deg_y);
  auto [a1, b1] = g1.bidegree();
  auto [a2, b2] = g2.bidegree();
  Form out{Poly(), p.deg_x * a1 + p.deg_y * a2, p.deg_x * b1 + p.deg_y * b2};
  auto rows = p.poly.recursive(Var::x);
  for (int i = 0; i <= rows.degree(); ++i) {
    const auto& row = rows.coeffs()[i];
    if (row.zero()) continue;
    Poly inner;
    for (int j = 0; j <= row.degree(); ++j) {
      if (is_zero(row.coeffs()[j])) continue;
      inner += (y1[j].poly * y0[p.deg_y - j].poly) * row.coeffs()[j];
    }
    out.poly += x1[i].poly * x0[p.deg_x - i].poly * inner;
  }
  return out;
}

SurfaceMap compose_plain(const SurfaceMap& f, const SurfaceMap& g) {
  BidegreeMatrix predicted = (bidegree_matrix(f) * bidegree_matrix(g)).eval();
  const Integer cap = max_symbolic_degree();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (predicted(i, j) > cap)
        throw Error(ErrorKind::ResourceCap, "composition would reach degree " + predicted(i, j).get_str() +
                                                " > BIRATIO_MAX_DEGREE=" + cap.get_str());
  MapCoordinate c[2];
  for (int k = 0; k < 2; ++k) {
    const auto& fk = f.coordinate(k);
    c[k] = clear_pair(substitute(fk.num, g), substitute(fk.den, g));
  }
  return SurfaceMap(c[0], c[1]);
}

}  // namespace

SurfaceMap::SurfaceMap(MapCoordinate first, MapCoordinate second) : coords_{std::move(first), std::move(second)} {}

SurfaceMap SurfaceMap::identity() {
  return from_fractions(Poly::x(), Poly(Rational(1)), Poly::y(), Poly(Rational(1)));
}

SurfaceMap SurfaceMap::swap() { return from_fractions(Poly::y(), Poly(Rational(1)), Poly::x(), Poly(Rational(1))); }

SurfaceMap SurfaceMap::from_fractions(const Poly& num1, const Poly& den1, const Poly& num2, const Poly& den2) {
  return SurfaceMap(bihomogenize(num1, den1), bihomogenize(num2, den2));
}

const SurfaceMap& SurfaceMap::inverse() const {
  if (!inverse_) throw Error(ErrorKind::MissingInverse, "map has no explicit inverse");
  return *inverse_;
}

SurfaceMap SurfaceMap::with_inverse(const SurfaceMap& inv) const {
  SurfaceMap back = without_inverse();
  SurfaceMap fwd = back;
  SurfaceMap i = inv.without_inverse();
  i.inverse_ = std::make_shared<const SurfaceMap>(back);
  fwd.inverse_ = std::make_shared<const SurfaceMap>(std::move(i));
  return fwd;
}

SurfaceMap SurfaceMap::without_inverse() const {
  SurfaceMap m = *this;
  m.inverse_.reset();
  return m;
}

int SurfaceMap::max_degree() const {
  int d = 0;
  for (const auto& c : coords_) d = std::max({d, c.num.deg_x, c.num.deg_y});
  return d;
}

SurfaceMap compose(const SurfaceMap& f, const SurfaceMap& g) {
  SurfaceMap out = compose_plain(f, g);
  if (f.has_inverse() && g.has_inverse()) return out.with_inverse(compose_plain(g.inverse(), f.inverse()));
  return out;
}

BidegreeMatrix bidegree_matrix(const SurfaceMap& f) {
  BidegreeMatrix m;
  for (int i = 0; i < 2; ++i) {
    auto [a, b] = f.coordinate(i).bidegree();
    m(i, 0) = a;
    m(i, 1) = b;
  }
  return m;
}

bool is_identity(const SurfaceMap& f) { return f == SurfaceMap::identity(); }

std::string to_string(const SurfaceMap& f) { return "(" + to_string(f.first()) + ", " + to_string(f.second()) + ")"; }

int max_symbolic_degree() {
  if (const char* env = std::getenv("BIRATIO_MAX_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 512;
}

DegreeSequence degree_sequence(const SurfaceMap& f, int iterations) {
  if (iterations < 1) throw Error(ErrorKind::Usage, "degree sequence needs at least one iterate");
  DegreeSequence out;
  SurfaceMap current = f.without_inverse();
  SurfaceMap base = current;
  out.matrices.push_back(bidegree_matrix(current));
  for (int k = 2; k <= iterations; ++k) {
    current = compose(base, current);
    out.matrices.push_back(bidegree_matrix(current));
  }
  const auto& last = out.matrices.back();
  double norm2 = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) norm2 += last(i, j).get_d() * last(i, j).get_d();
  out.growth_estimate = std::pow(std::sqrt(norm2), 1.0 / iterations);
  return out;
}

}  // namespace biratio

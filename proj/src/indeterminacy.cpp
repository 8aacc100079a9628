#include "biratio/indeterminacy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "biratio/modular.hpp"

namespace biratio {

namespace {

using Q = Rational;
using UQ = UPoly<Q>;
using BQ = BiPoly<Q>;
// Polynomial in the main variable v with coefficients in Q[w] (low to high).
using VPoly = std::vector<UQ>;

UQ reduce_mod(const UQ& a, const UQ& h) { return a.degree() < h.degree() ? a : divrem(a, h).second; }

VPoly to_vpoly(const BQ& p, Var v, const UQ& h) {
  VPoly out;
  const auto rec = p.recursive(v);
  for (const auto& c : rec.coeffs()) out.push_back(reduce_mod(c, h));
  while (!out.empty() && out.back().zero()) out.pop_back();
  return out;
}

VPoly reduce_vpoly(VPoly a, const UQ& h) {
  for (auto& c : a) c = reduce_mod(c, h);
  while (!a.empty() && a.back().zero()) a.pop_back();
  return a;
}

/// Triangular piece of a solution set: h(w) = 0 squarefree and g(w, v) = 0
/// with g monic in v over Q[w]/h.
struct Branch {
  UQ modulus;
  VPoly g;
};

/// gcd of a and b over (Q[w]/h)[v] by dynamic evaluation: whenever a
/// leading coefficient is a zero divisor the modulus splits and both halves
/// continue.
void d5_gcd(const UQ& h, VPoly a, VPoly b, std::vector<Branch>& out) {
  a = reduce_vpoly(std::move(a), h);
  b = reduce_vpoly(std::move(b), h);
  if (b.empty()) std::swap(a, b);
  if (b.empty()) throw Error(ErrorKind::PositiveDimensionalLocus, "both polynomials vanish on a component");
  while (true) {
    auto eg = extended_gcd(b.back(), h);
    if (eg.gcd.degree() > 0) {
      UQ h1 = eg.gcd, h2 = divexact(h, eg.gcd);
      d5_gcd(h1, a, b, out);
      d5_gcd(h2, a, b, out);
      return;
    }
    const UQ inv = reduce_mod(eg.s, h);
    if (a.empty()) {
      for (auto& c : b) c = reduce_mod(c * inv, h);
      out.push_back({h, std::move(b)});
      return;
    }
    // a <- a mod b
    while (!a.empty() && a.size() >= b.size()) {
      UQ f = reduce_mod(a.back() * inv, h);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = reduce_mod(a[i + shift] - f * b[i], h);
      a.pop_back();
      while (!a.empty() && a.back().zero()) a.pop_back();
    }
    std::swap(a, b);
    if (b.empty()) {
      std::swap(a, b);
      a.clear();
    }
  }
}

std::vector<Branch> d5_gcd_list(const UQ& h, const std::vector<BQ>& polys, Var v) {
  std::vector<Branch> branches;
  d5_gcd(h, to_vpoly(polys[0], v, h), to_vpoly(polys[1], v, h), branches);
  for (std::size_t k = 2; k < polys.size(); ++k) {
    std::vector<Branch> next;
    for (auto& br : branches) {
      if (br.g.size() <= 1) {
        next.push_back(std::move(br));
        continue;
      }
      d5_gcd(br.modulus, br.g, to_vpoly(polys[k], v, br.modulus), next);
    }
    branches = std::move(next);
  }
  return branches;
}

VPoly derivative_v(const VPoly& g) {
  VPoly out;
  for (std::size_t i = 1; i < g.size(); ++i) out.push_back(g[i] * Rational(static_cast<long>(i)));
  return out;
}

/// a / c over (Q[w]/h)[v] for monic c dividing a.
VPoly divide_monic(VPoly a, const VPoly& c, const UQ& h) {
  if (a.size() < c.size()) return {};
  VPoly q(a.size() - c.size() + 1);
  while (a.size() >= c.size()) {
    std::size_t shift = a.size() - c.size();
    UQ f = a.back();
    q[shift] = f;
    for (std::size_t i = 0; i < c.size(); ++i) a[i + shift] = reduce_mod(a[i + shift] - f * c[i], h);
    a.pop_back();
  }
  return q;
}

/// Splits branches until each g is squarefree in v on every root of its modulus.
std::vector<Branch> squarefree_branches(std::vector<Branch> branches) {
  std::vector<Branch> out;
  for (auto& br : branches) {
    if (br.g.size() <= 2) {
      out.push_back(std::move(br));
      continue;
    }
    std::vector<Branch> parts;
    d5_gcd(br.modulus, br.g, derivative_v(br.g), parts);
    for (auto& part : parts) out.push_back({part.modulus, divide_monic(reduce_vpoly(br.g, part.modulus), part.g, part.modulus)});
  }
  return out;
}

UQ eliminant(const BQ& p, const BQ& q, Var v) {
  UQ r = resultant_up_to_unit(p, q, v);
  if (r.zero()) throw Error(ErrorKind::PositiveDimensionalLocus, "resultant vanishes identically");
  return r;
}

Complex eval_complex(const UQ& p, Complex z) {
  Complex acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

IndPoint make_point(Var v, Complex w, Complex vv, double radius, int coordinate) {
  IndPoint pt;
  pt.x = P1Point::at(v == Var::y ? w : vv);
  pt.y = P1Point::at(v == Var::y ? vv : w);
  pt.radius = radius;
  pt.coordinate = coordinate;
  return pt;
}

std::vector<IndPoint> branch_points(const std::vector<Branch>& branches, Var v, int coordinate) {
  std::vector<IndPoint> out;
  for (const auto& br : branches) {
    if (br.g.size() <= 1) continue;
    for (const auto& wr : polynomial_roots(br.modulus)) {
      std::vector<Complex> cs;
      for (const auto& c : br.g) cs.push_back(eval_complex(c, wr.value));
      if (cs.size() == 2) {
        out.push_back(make_point(v, wr.value, -cs[0] / cs[1], wr.radius, coordinate));
        continue;
      }
      for (const auto& vr : polynomial_roots(cs))
        out.push_back(make_point(v, wr.value, vr.value, std::max(wr.radius, vr.radius), coordinate));
    }
  }
  return out;
}

Var choose_variable(const std::vector<BQ>& polys) {
  double work_x = 0.0, work_y = 0.0;
  for (std::size_t k = 0; k + 1 < polys.size(); k += 2) {
    work_x += elimination_work(polys[k], polys[k + 1], Var::x);
    work_y += elimination_work(polys[k], polys[k + 1], Var::y);
  }
  return work_x < work_y ? Var::x : Var::y;
}

/// Common zeros of univariate polynomials (zero polynomials impose nothing).
UQ univariate_common(const std::vector<BQ>& polys, Var var) {
  UQ g;
  for (const auto& p : polys) g = gcd_rational(g, p.univariate(var));
  if (g.zero()) throw Error(ErrorKind::PositiveDimensionalLocus, "every form vanishes on a line at infinity");
  return g;
}

std::vector<IndPoint> stratum_points(Stratum s, const std::vector<BQ>& polys, int coordinate) {
  std::vector<IndPoint> out;
  switch (s) {
    case Stratum::Affine: {
      if (std::any_of(polys.begin(), polys.end(), [](const BQ& p) { return !p.zero() && p.total_degree() == 0; }))
        return out;
      Var v = choose_variable(polys);
      UQ h;
      for (std::size_t k = 0; k + 1 < polys.size(); k += 2) {
        UQ e = squarefree_rational(eliminant(polys[k], polys[k + 1], v));
        h = k == 0 ? e : gcd_rational(h, e);
      }
      if (h.degree() <= 0) return out;
      return branch_points(squarefree_branches(d5_gcd_list(h, polys, v)), v, coordinate);
    }
    case Stratum::XInfinite:
    case Stratum::YInfinite: {
      Var var = s == Stratum::XInfinite ? Var::y : Var::x;
      for (const auto& r : polynomial_roots(squarefree_rational(univariate_common(polys, var)))) {
        IndPoint pt;
        pt.x = s == Stratum::XInfinite ? P1Point::infinity() : P1Point::at(r.value);
        pt.y = s == Stratum::XInfinite ? P1Point::at(r.value) : P1Point::infinity();
        pt.radius = r.radius;
        pt.coordinate = coordinate;
        out.push_back(pt);
      }
      return out;
    }
    case Stratum::BothInfinite: {
      if (std::all_of(polys.begin(), polys.end(), [](const BQ& p) { return p.zero(); }))
        out.push_back({P1Point::infinity(), P1Point::infinity(), 0.0, coordinate});
      return out;
    }
  }
  return out;
}

BQ restrict_form(const BiHomForm<Q>& f, Stratum s) {
  BQ out;
  for (const auto& [m, c] : f.poly.terms()) {
    bool top_x = m.first == f.deg_x, top_y = m.second == f.deg_y;
    switch (s) {
      case Stratum::Affine:
        out += BQ::monomial(c, m.first, m.second);
        break;
      case Stratum::XInfinite:
        if (top_x) out += BQ::monomial(c, 0, m.second);
        break;
      case Stratum::YInfinite:
        if (top_y) out += BQ::monomial(c, m.first, 0);
        break;
      case Stratum::BothInfinite:
        if (top_x && top_y) out += BQ(c);
        break;
    }
  }
  return out;
}

void dedup_into(std::vector<IndPoint>& acc, const std::vector<IndPoint>& add) {
  for (const auto& p : add) {
    bool seen = std::any_of(acc.begin(), acc.end(), [&](const IndPoint& q) {
      return point_distance(p, q) <= std::max(1e-9, 4 * (p.radius + q.radius));
    });
    if (!seen) acc.push_back(p);
  }
}

constexpr Stratum kStrata[] = {Stratum::Affine, Stratum::XInfinite, Stratum::YInfinite, Stratum::BothInfinite};

}  // namespace

double chordal_distance(const P1Point& a, const P1Point& b) {
  if (a.infinite && b.infinite) return 0.0;
  if (a.infinite) return 1.0 / std::sqrt(1.0 + std::norm(b.value));
  if (b.infinite) return 1.0 / std::sqrt(1.0 + std::norm(a.value));
  return std::abs(a.value - b.value) / (std::sqrt(1.0 + std::norm(a.value)) * std::sqrt(1.0 + std::norm(b.value)));
}

std::string to_string(const P1Point& p) {
  if (p.infinite) return "inf";
  std::ostringstream os;
  os.precision(12);
  os << p.value.real() << (p.value.imag() < 0 ? "-" : "+") << std::abs(p.value.imag()) << "i";
  return os.str();
}

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::Affine: return "affine";
    case Stratum::XInfinite: return "x=inf";
    case Stratum::YInfinite: return "y=inf";
    case Stratum::BothInfinite: return "x=y=inf";
  }
  return "?";
}

double point_distance(const IndPoint& a, const IndPoint& b) {
  return std::max(chordal_distance(a.x, b.x), chordal_distance(a.y, b.y));
}

std::vector<IndSystem> stratum_systems(const MapCoordinate& c, int coordinate) {
  std::vector<IndSystem> out;
  for (Stratum s : kStrata) out.push_back({coordinate, s, restrict_form(c.num, s), restrict_form(c.den, s)});
  return out;
}

std::vector<IndPoint> solve_system(const IndSystem& s) {
  if (s.p.zero() && s.q.zero() && s.stratum != Stratum::BothInfinite)
    throw Error(ErrorKind::PositiveDimensionalLocus, "coordinate pair vanishes on " + to_string(s.stratum));
  return stratum_points(s.stratum, {s.p, s.q}, s.coordinate);
}

IndSet indeterminacy_set(const SurfaceMap& f) {
  IndSet out;
  for (int i = 0; i < 2; ++i)
    for (auto& sys : stratum_systems(f.coordinate(i), i)) out.systems.push_back(std::move(sys));
  for (const auto& sys : out.systems) dedup_into(out.points, solve_system(sys));
  return out;
}

DisjointnessCertificate ind_disjoint(const SurfaceMap& f) {
  const SurfaceMap& g = f.inverse();
  DisjointnessCertificate cert;
  for (int i = 0; i < 2; ++i) {
    auto fs = stratum_systems(f.coordinate(i), i);
    for (int j = 0; j < 2; ++j) {
      auto gs = stratum_systems(g.coordinate(j), j);
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const Stratum s = fs[k].stratum;
        std::string tag = "f[" + std::to_string(i) + "] vs f^-1[" + std::to_string(j) + "] on " + to_string(s);
        if (s == Stratum::Affine) {
          auto mc = modular_disjointness(fs[k].p, fs[k].q, gs[k].p, gs[k].q);
          if (mc.certified) {
            ++cert.modular_checks;
            cert.log.push_back(tag + ": " + mc.detail);
            continue;
          }
        }
        ++cert.exact_checks;
        auto pts = stratum_points(s, {fs[k].p, fs[k].q, gs[k].p, gs[k].q}, i);
        if (pts.empty()) {
          cert.log.push_back(tag + ": no common solution (exact)");
          continue;
        }
        cert.disjoint = false;
        cert.log.push_back(tag + ": " + std::to_string(pts.size()) + " common point(s)");
        dedup_into(cert.overlap, pts);
      }
    }
  }
  return cert;
}

double hausdorff_distance(const std::vector<IndPoint>& a, const std::vector<IndPoint>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<IndPoint>& from, const std::vector<IndPoint>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) best = std::min(best, point_distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace biratio

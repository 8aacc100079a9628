#include "biratio/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

namespace biratio {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

using Pair = std::array<Complex, 2>;

Pair scaled_pair(Pair p) {
  double m = std::max(std::abs(p[0]), std::abs(p[1]));
  if (m > 0 && std::isfinite(m)) {
    p[0] /= m;
    p[1] /= m;
  }
  return p;
}

double angle_of(const Pair& x) { return normalize_angle(std::arg(cayley(x))); }

P1Point to_p1(const Pair& x) {
  if (std::abs(x[0]) <= 1e-300 * std::abs(x[1])) return P1Point::infinity();
  return P1Point::at(x[1] / x[0]);
}

IndPoint to_ind(const HomPoint& p) {
  IndPoint q;
  q.x = to_p1({p[0], p[1]});
  q.y = to_p1({p[2], p[3]});
  return q;
}

std::array<double, 2> increments(const TorusPoint& from, const TorusPoint& to) {
  return {wrap_angle(to.phi1 - from.phi1), wrap_angle(to.phi2 - from.phi2)};
}

char* fmt(char* buf, double v) {
  std::snprintf(buf, 32, "%.12e", v);
  return buf;
}

}  // namespace

double wrap_angle(double a) {
  double r = std::remainder(a, kTwoPi);  // [-pi, pi]
  return r <= -kPi ? r + kTwoPi : r;
}

double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

TorusPoint normalized(TorusPoint p) { return {normalize_angle(p.phi1), normalize_angle(p.phi2)}; }

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  return std::max(std::abs(wrap_angle(a.phi1 - b.phi1)), std::abs(wrap_angle(a.phi2 - b.phi2)));
}

// w = e^{i phi} pulls back to x = i(1 + w)/(1 - w), i.e. [1 - w : i(1 + w)],
// which is the real pair [-sin(phi/2) : cos(phi/2)] up to a unit.
Pair circle_point(double phi) { return {Complex(-std::sin(phi / 2), 0.0), Complex(std::cos(phi / 2), 0.0)}; }

Complex cayley(const Pair& x) {
  const Complex i(0.0, 1.0);
  return (x[1] - i * x[0]) / (x[1] + i * x[0]);
}

HomPoint scaled(HomPoint p) {
  auto a = scaled_pair({p[0], p[1]}), b = scaled_pair({p[2], p[3]});
  return {a[0], a[1], b[0], b[1]};
}

HomPoint to_hom(const TorusPoint& p) {
  auto a = circle_point(p.phi1), b = circle_point(p.phi2);
  return {a[0], a[1], b[0], b[1]};
}

NumericMap::NumericMap(const SurfaceMap& f) {
  for (int k = 0; k < 2; ++k) {
    const auto& c = f.coordinate(k);
    const BiHomForm<Rational>* src[2] = {&c.den, &c.num};
    for (int s = 0; s < 2; ++s) {
      Form& out = forms_[k][s];
      out.deg_x = src[s]->deg_x;
      out.deg_y = src[s]->deg_y;
      for (const auto& [m, coef] : src[s]->poly.terms()) {
        out.terms.push_back({m.first, m.second, coef.get_d()});
        out.scale += std::abs(coef.get_d());
      }
    }
  }
}

Complex NumericMap::Form::eval(const HomPoint& p) const {
  Complex px0[64], px1[64], py0[64], py1[64];
  std::vector<Complex> big;
  Complex *ax0 = px0, *ax1 = px1, *ay0 = py0, *ay1 = py1;
  if (deg_x >= 64 || deg_y >= 64) {
    big.resize(2 * (deg_x + 1) + 2 * (deg_y + 1));
    ax0 = big.data();
    ax1 = ax0 + deg_x + 1;
    ay0 = ax1 + deg_x + 1;
    ay1 = ay0 + deg_y + 1;
  }
  ax0[0] = ax1[0] = ay0[0] = ay1[0] = 1.0;
  for (int i = 1; i <= deg_x; ++i) {
    ax0[i] = ax0[i - 1] * p[0];
    ax1[i] = ax1[i - 1] * p[1];
  }
  for (int j = 1; j <= deg_y; ++j) {
    ay0[j] = ay0[j - 1] * p[2];
    ay1[j] = ay1[j - 1] * p[3];
  }
  Complex acc = 0.0;
  for (const auto& t : terms) acc += t.c * ax1[t.i] * ax0[deg_x - t.i] * ay1[t.j] * ay0[deg_y - t.j];
  return acc;
}

double NumericMap::margin(const HomPoint& p) const {
  HomPoint q = scaled(p);
  double worst = INFINITY;
  for (int k = 0; k < 2; ++k) {
    double m = std::max(std::abs(forms_[k][0].eval(q)), std::abs(forms_[k][1].eval(q)));
    double s = std::max(forms_[k][0].scale, forms_[k][1].scale);
    worst = std::min(worst, s > 0 ? m / s : 0.0);
  }
  return worst;
}

HomPoint NumericMap::operator()(const HomPoint& p, double guard) const {
  HomPoint q = scaled(p);
  HomPoint out;
  for (int k = 0; k < 2; ++k) {
    Complex den = forms_[k][0].eval(q), num = forms_[k][1].eval(q);
    double m = std::max(std::abs(den), std::abs(num));
    double s = std::max(forms_[k][0].scale, forms_[k][1].scale);
    if (!(m > guard * s))
      throw Error(ErrorKind::SingularityApproach, "image coordinate " + std::to_string(k + 1) +
                                                      " within the guard radius of an indeterminacy point");
    auto pr = scaled_pair({den, num});
    out[2 * k] = pr[0];
    out[2 * k + 1] = pr[1];
  }
  return out;
}

TorusPoint NumericMap::on_torus(const TorusPoint& p, double guard) const {
  HomPoint img = (*this)(to_hom(p), guard);
  return {angle_of({img[0], img[1]}), angle_of({img[2], img[3]})};
}

TorusPoint OrbitRecord::point(int k) const { return normalized({lifts.at(k)[0], lifts.at(k)[1]}); }

OrbitRecord orbit(const NumericMap& f, TorusPoint seed, int steps, double guard) {
  if (steps < 0) throw Error(ErrorKind::Usage, "negative step count");
  OrbitRecord o;
  o.seed = normalized(seed);
  o.steps = steps;
  o.lifts.reserve(steps + 1);
  o.lifts.push_back({o.seed.phi1, o.seed.phi2});
  o.min_margin = f.margin(to_hom(o.seed));
  TorusPoint cur = o.seed;
  for (int k = 1; k <= steps; ++k) {
    TorusPoint next;
    try {
      next = f.on_torus(cur, guard);
    } catch (const Error& e) {
      throw Error(ErrorKind::SingularityApproach, "step " + std::to_string(k) + ": " + e.what());
    }
    o.min_margin = std::min(o.min_margin, f.margin(to_hom(cur)));
    auto inc = increments(cur, next);
    const auto& last = o.lifts.back();
    o.lifts.push_back({last[0] + inc[0], last[1] + inc[1]});
    cur = next;
  }
  return o;
}

RotationVector rotation_vector(const OrbitRecord& o) {
  if (o.steps < 100) throw Error(ErrorKind::Usage, "rotation vector needs at least 100 steps");
  const int n = o.steps, h = n / 2;
  RotationVector r;
  double half1 = (o.lifts[h][0] - o.lifts[0][0]) / h, half2 = (o.lifts[h][1] - o.lifts[0][1]) / h;
  r.rho1 = (o.lifts[n][0] - o.lifts[0][0]) / n;
  r.rho2 = (o.lifts[n][1] - o.lifts[0][1]) / n;
  r.error = std::max(std::abs(r.rho1 - half1), std::abs(r.rho2 - half2));
  return r;
}

const char* to_string(FixedPointKind k) {
  switch (k) {
    case FixedPointKind::RotationLike: return "rotation-like";
    case FixedPointKind::Degenerate: return "degenerate";
    case FixedPointKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

namespace {

Eigen::Vector2d displacement(const NumericMap& f, const Eigen::Vector2d& phi) {
  TorusPoint img = f.on_torus({phi(0), phi(1)});
  return {wrap_angle(img.phi1 - phi(0)), wrap_angle(img.phi2 - phi(1))};
}

Eigen::Matrix2d jacobian(const NumericMap& f, const Eigen::Vector2d& phi, double h = 1e-6) {
  Eigen::Matrix2d J;
  for (int k = 0; k < 2; ++k) {
    Eigen::Vector2d e = Eigen::Vector2d::Zero();
    e(k) = h;
    TorusPoint a = f.on_torus({phi(0) + e(0), phi(1) + e(1)});
    TorusPoint b = f.on_torus({phi(0) - e(0), phi(1) - e(1)});
    J(0, k) = wrap_angle(a.phi1 - b.phi1) / (2 * h);
    J(1, k) = wrap_angle(a.phi2 - b.phi2) / (2 * h);
  }
  return J;
}

}  // namespace

FixedPointCensus fixed_point_census(const NumericMap& f, int grid, double tol) {
  if (grid < 16) throw Error(ErrorKind::Usage, "fixed-point census needs grid >= 16");
  FixedPointCensus c;
  c.seeds = grid * grid;

  for (int j = 0; j < 2; ++j) c.identity_factor[j] = true;
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b) {
      Eigen::Vector2d phi(kTwoPi * (a + 0.5) / grid, kTwoPi * (b + 0.5) / grid);
      Eigen::Vector2d g = displacement(f, phi);
      for (int j = 0; j < 2; ++j)
        if (std::abs(g(j)) > tol) c.identity_factor[j] = false;
    }
  c.degenerate_identity = c.identity_factor[0] || c.identity_factor[1];
  if (c.identity_factor[0] && c.identity_factor[1]) {
    c.notes.push_back("map is the identity on the torus; no fixed point is isolated");
    return c;
  }
  if (c.degenerate_identity)
    c.notes.push_back("factor " + std::to_string(c.identity_factor[0] ? 1 : 2) +
                      " is the identity; any fixed points form circles");

  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b) {
      Eigen::Vector2d phi(kTwoPi * (a + 0.5) / grid, kTwoPi * (b + 0.5) / grid);
      bool converged = false;
      try {
        for (int it = 0; it < 60; ++it) {
          Eigen::Vector2d g = displacement(f, phi);
          if (g.cwiseAbs().maxCoeff() < 1e-13) {
            converged = true;
            break;
          }
          Eigen::Matrix2d J = jacobian(f, phi) - Eigen::Matrix2d::Identity();
          if (std::abs(J.determinant()) < 1e-14) break;
          Eigen::Vector2d step = J.partialPivLu().solve(-g);
          // Damp long jumps; the displacement is only defined mod 2 pi.
          double len = step.cwiseAbs().maxCoeff();
          if (len > 0.5) step *= 0.5 / len;
          phi += step;
          phi(0) = normalize_angle(phi(0));
          phi(1) = normalize_angle(phi(1));
        }
        if (!converged) converged = displacement(f, phi).cwiseAbs().maxCoeff() < 1e-10;
      } catch (const Error&) {
        converged = false;
      }
      if (!converged) {
        ++c.nonconverged;
        continue;
      }
      TorusPoint loc{phi(0), phi(1)};
      bool seen = false;
      for (const auto& p : c.points)
        if (torus_distance(p.location, loc) < tol) seen = true;
      if (seen) continue;
      FixedPointRecord r;
      r.location = loc;
      r.residual = displacement(f, phi).cwiseAbs().maxCoeff();
      r.jacobian = jacobian(f, phi);
      r.det_df_minus_id = (r.jacobian - Eigen::Matrix2d::Identity()).determinant();
      double tr = r.jacobian.trace(), det = r.jacobian.determinant();
      if (std::abs(r.det_df_minus_id) < 1e-6) r.kind = FixedPointKind::Degenerate;
      else if (tr * tr - 4 * det < 0) r.kind = FixedPointKind::RotationLike;
      else r.kind = FixedPointKind::Hyperbolic;
      c.points.push_back(r);
    }
  bool positive = std::all_of(c.points.begin(), c.points.end(),
                              [](const FixedPointRecord& r) { return r.det_df_minus_id > 0; });
  c.lefschetz_consistent = static_cast<int>(c.points.size()) == c.euler_characteristic && positive;
  if (!positive) c.notes.push_back("an isolated fixed point has det(df - I) <= 0");
  return c;
}

double sup_distance(const NumericMap& f, const NumericMap& g, int grid) {
  if (grid < 1) throw Error(ErrorKind::Usage, "grid must be positive");
  double worst = 0.0;
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b) {
      TorusPoint p{kTwoPi * (a + 0.5) / grid, kTwoPi * (b + 0.5) / grid};
      worst = std::max(worst, torus_distance(f.on_torus(p), g.on_torus(p)));
    }
  return worst;
}

DiophantineReport diophantine_check(std::array<double, 2> alpha, double beta, int kmax) {
  if (kmax < 1 || kmax > 1000) throw Error(ErrorKind::Usage, "kmax must lie in [1, 1000]");
  DiophantineReport r;
  r.alpha = alpha;
  r.beta = beta;
  r.kmax = kmax;
  r.c_emp = INFINITY;
  std::vector<double> weight(kmax + 1);
  for (int m = 0; m <= kmax; ++m) weight[m] = std::pow(static_cast<double>(m), beta);
  int resonance_norm = kmax + 1;
  for (int k1 = -kmax; k1 <= kmax; ++k1)
    for (int k2 = -kmax; k2 <= kmax; ++k2) {
      double s = k1 * alpha[0] + k2 * alpha[1];
      int m12 = std::max(std::abs(k1), std::abs(k2));
      for (int k3 = -kmax; k3 <= kmax; ++k3) {
        int m = std::max(m12, std::abs(k3));
        if (m == 0) continue;
        double v = std::abs(s + k3 * kTwoPi);
        double val = v * weight[m];
        if (val < r.c_emp) {
          r.c_emp = val;
          r.argmin = {k1, k2, k3};
        }
        if (v == 0.0 && m <= resonance_norm) {
          std::array<int, 3> k{k1, k2, k3};
          int first = k1 != 0 ? k1 : k2 != 0 ? k2 : k3;
          if (first < 0) k = {-k1, -k2, -k3};
          if (m < resonance_norm) r.resonances.clear();
          resonance_norm = m;
          if (std::find(r.resonances.begin(), r.resonances.end(), k) == r.resonances.end())
            r.resonances.push_back(k);
        }
      }
    }
  std::sort(r.resonances.begin(), r.resonances.end());
  if (!r.resonances.empty()) r.argmin = r.resonances.front();
  return r;
}

double cayley_drift(const Pair& x) {
  const Complex i(0.0, 1.0);
  return std::abs(std::log(std::abs(x[1] - i * x[0])) - std::log(std::abs(x[1] + i * x[0])));
}

double real_drift(const Pair& x) {
  Complex z = std::abs(x[1]) <= std::abs(x[0]) ? x[1] / x[0] : -x[0] / x[1];
  return std::abs(z.imag());
}

ProbeReport complex_probe(const SurfaceMap& f, const ProbeOptions& opts) {
  if (!(opts.offset >= 0) || opts.seeds < 1 || opts.steps < 0)
    throw Error(ErrorKind::Usage, "probe needs offset >= 0, seeds >= 1, steps >= 0");
  const NumericMap fwd(f), bwd(f.inverse());
  std::vector<IndPoint> ind = indeterminacy_set(f).points;
  for (const auto& p : indeterminacy_set(f.inverse()).points) ind.push_back(p);

  auto ind_distance = [&](const HomPoint& p) {
    IndPoint q = to_ind(p);
    double best = 1.0;
    for (const auto& s : ind) best = std::min(best, point_distance(q, s));
    return best;
  };
  auto drift = [](const HomPoint& p) { return std::max(cayley_drift({p[0], p[1]}), cayley_drift({p[2], p[3]})); };

  std::mt19937_64 rng(opts.rng_seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::bernoulli_distribution side(0.5);
  // w = e^{+-offset + i phi}: at hyperbolic distance `offset` from |w| = 1.
  auto perturbed = [&](double phi) {
    if (opts.offset == 0.0) return circle_point(phi);
    Complex w = std::polar(std::exp(side(rng) ? opts.offset : -opts.offset), phi);
    return scaled_pair({1.0 - w, Complex(0.0, 1.0) * (1.0 + w)});
  };

  ProbeReport rep;
  rep.min_ind_distance = 1.0;
  for (int s = 0; s < opts.seeds; ++s) {
    Pair a = perturbed(angle(rng)), b = perturbed(angle(rng));
    ProbeSeed seed;
    seed.start = scaled({a[0], a[1], b[0], b[1]});
    seed.min_ind_distance = ind_distance(seed.start);
    seed.max_drift = drift(seed.start);
    for (int dir = 0; dir < 2 && seed.bounded; ++dir) {
      const NumericMap& g = dir == 0 ? fwd : bwd;
      HomPoint p = seed.start;
      for (int k = 1; k <= opts.steps; ++k) {
        try {
          p = g(p);
        } catch (const Error&) {
          seed.ind_approach = true;
        }
        bool finite = std::all_of(p.begin(), p.end(), [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
        if (!finite) seed.blew_up = true;
        double dr = finite ? drift(p) : INFINITY, di = finite ? ind_distance(p) : 0.0;
        seed.max_drift = std::max(seed.max_drift, dr);
        seed.min_ind_distance = std::min(seed.min_ind_distance, di);
        if (di < opts.ind_radius) seed.ind_approach = true;
        if (dr > opts.escape_drift) seed.blew_up = true;
        if (s == 0) rep.trace.push_back({dir == 0 ? k : -k, finite ? real_drift({p[0], p[1]}) : INFINITY,
                                         finite ? real_drift({p[2], p[3]}) : INFINITY, di});
        if (seed.ind_approach || seed.blew_up) {
          seed.bounded = false;
          seed.stopped_at = dir == 0 ? k : -k;
          break;
        }
      }
    }
    rep.max_drift = std::max(rep.max_drift, seed.max_drift);
    rep.min_ind_distance = std::min(rep.min_ind_distance, seed.min_ind_distance);
    rep.seeds.push_back(seed);
  }
  std::stable_sort(rep.trace.begin(), rep.trace.end(), [](const ProbeTrace& a, const ProbeTrace& b) {
    return a.step < b.step;
  });
  rep.all_bounded = std::all_of(rep.seeds.begin(), rep.seeds.end(), [](const ProbeSeed& s) { return s.bounded; });
  return rep;
}

void write_orbit_csv(std::ostream& os, const OrbitRecord& o) {
  char a[32], b[32], c[32], d[32];
  os << "step,phi1,phi2,lift1,lift2\n";
  for (int k = 0; k <= o.steps; ++k) {
    TorusPoint p = o.point(k);
    os << k << ',' << fmt(a, p.phi1) << ',' << fmt(b, p.phi2) << ',' << fmt(c, o.lifts[k][0]) << ','
       << fmt(d, o.lifts[k][1]) << '\n';
  }
}

void write_probe_csv(std::ostream& os, const ProbeReport& r) {
  char a[32], b[32], c[32];
  os << "step,im_x,im_y,dist_to_ind\n";
  for (const auto& t : r.trace)
    os << t.step << ',' << fmt(a, t.im_x) << ',' << fmt(b, t.im_y) << ',' << fmt(c, t.dist_to_ind) << '\n';
}

}  // namespace biratio

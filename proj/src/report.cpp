#include "biratio/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace biratio {

namespace {

constexpr unsigned kDecimalDigits = 30;

Json rational_pair(const std::pair<Rational, Rational>& e) {
  return Json{{"lo", to_decimal(e.first, kDecimalDigits)}, {"hi", to_decimal(e.second, kDecimalDigits)}};
}

Json points(const std::vector<IndPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

// Ascending coefficients as "p/q" strings.
Json coefficients(const UPoly<Rational>& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json torus(const TorusPoint& p) { return Json::array({format_float(p.phi1), format_float(p.phi2)}); }

}  // namespace

std::string format_float(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

Json to_json(const P1Point& p) {
  if (p.infinite) return "infinity";
  return Json::array({format_float(p.value.real()), format_float(p.value.imag())});
}

Json to_json(const IndPoint& p) {
  return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"radius", format_float(p.radius)}, {"coordinate", p.coordinate}};
}

Json to_json(const BidegreeMatrix& m) { return to_string(m); }

Json to_json(const QuadExt& q) {
  auto e = q.enclosure(kDecimalDigits);
  return Json{{"exact", to_string(q)}, {"enclosure", rational_pair(e)}};
}

Json to_json(const XieVerdict& v) {
  bool certified = v.status == XieStatus::Certified;
  return Json{
      {"verdict", certified ? "Certified" : "Inconclusive"},
      {"claim", certified ? "lambda_lower_bound > 1" : "none"},
      {"deg_f", to_json(v.deg_f)},
      {"deg_f2", to_json(v.deg_f2)},
      {"ratio", to_json(v.ratio)},
      {"constant_squared", xie_constant_squared().get_str()},
      {"lambda_lower_bound", Json{{"exact", exact_bound_string(v)}, {"enclosure", rational_pair(v.bound_enclosure)}}},
      {"stability", v.stability},
  };
}

Json to_json(const DisjointnessCertificate& c) {
  Json log = Json::array();
  for (const auto& line : c.log) log.push_back(line);
  return Json{{"verdict", c.disjoint ? "Disjoint" : "Overlap"},
              {"overlap", points(c.overlap)},
              {"modular_checks", c.modular_checks},
              {"exact_checks", c.exact_checks},
              {"log", log}};
}

Json to_json(const ClosedFormIndReport& r) {
  return Json{{"computed", points(r.computed)},
              {"displayed_distance", format_float(r.displayed_distance)},
              {"factored_distance", format_float(r.factored_distance)},
              {"tolerance", format_float(r.tolerance)},
              {"matching", r.matching},
              {"discrepancies", points(r.discrepancies)}};
}

Json to_json(const FnData& f) {
  auto roots = [](const std::vector<NumericRoot>& rs) {
    Json a = Json::array();
    for (const auto& r : rs)
      a.push_back(Json::array({format_float(r.value.real()), format_float(r.value.imag())}));
    return a;
  };
  Json j{{"coprime", f.coprime},       {"simple_zeros", f.simple_zeros}, {"simple_poles", f.simple_poles},
         {"real_zeros", f.real_zeros}, {"real_poles", f.real_poles}};
  // Dense polynomials are only printed at small degree.
  if (f.numerator.degree() <= 64) {
    j["numerator"] = coefficients(f.numerator);
    j["denominator"] = coefficients(f.denominator);
    j["zeros"] = roots(f.zeros);
    j["poles"] = roots(f.poles);
  }
  return j;
}

Json to_json(const TheoremReport& r) {
  Json stages;
  if (r.fn) stages["fn"] = to_json(*r.fn);
  Json ind;
  if (r.ind_f) ind["f"] = to_json(*r.ind_f);
  if (r.ind_f_inverse) ind["f_inverse"] = to_json(*r.ind_f_inverse);
  ind["all_nonreal"] = r.all_nonreal;
  ind["min_imag_part"] = format_float(r.min_imag_part);
  ind["poles_antipode_stable"] = r.poles_antipode_stable;
  ind["zeros_antipode_stable"] = r.zeros_antipode_stable;
  stages["indeterminacy"] = ind;
  Json disj{{"closed_form_separation", format_float(r.closed_form_separation)},
            {"verdict", r.disjoint ? "Disjoint" : "Overlap"}};
  if (r.disjointness) disj["certificate"] = to_json(*r.disjointness);
  stages["disjointness"] = disj;
  if (r.bidegree) stages["bidegree"] = to_json(*r.bidegree);
  if (r.xie) stages["xie"] = to_json(*r.xie);
  stages["degree_identities"] = r.degree_identities;
  if (r.orbit_geometry)
    stages["orbit_geometry"] = Json{{"samples", r.orbit_geometry->samples},
                                    {"two_crossings", r.orbit_geometry->two_crossings},
                                    {"max_mismatch", format_float(r.orbit_geometry->max_mismatch)}};
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(f);
  return Json{{"symbolic", r.symbolic},
              {"theta", Json::array({format_float(r.theta1), format_float(r.theta2)})},
              {"epsilon", format_float(r.epsilon)},
              {"stages", stages},
              {"failures", failures},
              {"verdict", r.failures.empty() ? "pass" : "fail"}};
}

Json to_json(const FixedPointCensus& c) {
  Json pts = Json::array();
  for (const auto& p : c.points)
    pts.push_back(Json{{"location", torus(p.location)},
                       {"residual", format_float(p.residual)},
                       {"det_df_minus_id", format_float(p.det_df_minus_id)},
                       {"kind", to_string(p.kind)}});
  Json notes = Json::array();
  for (const auto& n : c.notes) notes.push_back(n);
  return Json{{"points", pts},
              {"count", c.points.size()},
              {"seeds", c.seeds},
              {"nonconverged", c.nonconverged},
              {"euler_characteristic", c.euler_characteristic},
              {"lefschetz_consistent", c.lefschetz_consistent},
              {"identity_factor", Json::array({c.identity_factor[0], c.identity_factor[1]})},
              {"degenerate_identity", c.degenerate_identity},
              {"notes", notes}};
}

Json to_json(const DiophantineReport& r) {
  Json res = Json::array();
  for (const auto& k : r.resonances) res.push_back(Json::array({k[0], k[1], k[2]}));
  return Json{{"alpha", Json::array({format_float(r.alpha[0]), format_float(r.alpha[1])})},
              {"beta", format_float(r.beta)},
              {"kmax", r.kmax},
              {"argmin", Json::array({r.argmin[0], r.argmin[1], r.argmin[2]})},
              {"c_emp", format_float(r.c_emp)},
              {"resonances", res}};
}

Json to_json(const RotationVector& r) {
  return Json{{"rho", Json::array({format_float(r.rho1), format_float(r.rho2)})}, {"error", format_float(r.error)}};
}

Json to_json(const ProbeReport& r) {
  int bounded = 0, ind = 0, blown = 0;
  for (const auto& s : r.seeds) {
    bounded += s.bounded;
    ind += s.ind_approach;
    blown += s.blew_up;
  }
  return Json{{"seeds", r.seeds.size()},
              {"bounded", bounded},
              {"ind_approaches", ind},
              {"escapes", blown},
              {"all_bounded", r.all_bounded},
              {"max_drift", format_float(r.max_drift)},
              {"min_ind_distance", format_float(r.min_ind_distance)}};
}

void emit_report(std::ostream& os, const Json& report) { os << report.dump(2) << '\n'; }

void emit_report_file(const std::string& path, const Json& report) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  emit_report(f, report);
  f.flush();
  if (!f) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

void write_ind_csv(std::ostream& os, const std::string& set, const std::vector<IndPoint>& pts, bool header) {
  if (header) os << "set,coordinate,x_inf,x_re,x_im,y_inf,y_re,y_im\n";
  auto side = [&](const P1Point& p) {
    if (p.infinite) return std::string("1,0,0");
    return "0," + format_float(p.value.real()) + "," + format_float(p.value.imag());
  };
  for (const auto& p : pts) os << set << ',' << p.coordinate << ',' << side(p.x) << ',' << side(p.y) << '\n';
}

}  // namespace biratio

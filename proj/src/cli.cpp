#include "biratio/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "biratio/expression.hpp"
#include "biratio/report.hpp"

namespace biratio {

namespace {

constexpr std::size_t kMaxInput = 1 << 20;

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::Usage, what); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) usage("bad number '" + s + "' for " + what);
  return v;
}

int parse_int(const std::string& s, const std::string& what) {
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || v < INT32_MIN || v > INT32_MAX)
    usage("bad integer '" + s + "' for " + what);
  return static_cast<int>(v);
}

std::array<double, 2> parse_pair(const std::string& s, const std::string& what) {
  auto parts = split(s, ',');
  if (parts.size() != 2) usage(what + " expects two comma-separated numbers");
  return {parse_double(parts[0], what), parse_double(parts[1], what)};
}

Rational parse_param(const std::string& s, const std::string& what) {
  try {
    return parse_rational(s);
  } catch (const Error&) {
    usage("bad rational '" + s + "' for " + what);
  }
}

/// "n,d,t1,t2", or "n,d,t" for t1 = t2 = t.
HermanFamilyParams parse_family(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 3 && parts.size() != 4) usage("--family expects n,d,t1,t2");
  HermanFamilyParams p;
  p.n = parse_int(parts[0], "n");
  p.d = parse_int(parts[1], "d");
  p.t1 = parse_param(parts[2], "t1");
  p.t2 = parse_param(parts.size() == 4 ? parts[3] : parts[2], "t2");
  if (p.n < 2) usage("n must be at least 2");
  if (p.d < 1) usage("d must be at least 1");
  return p;
}

/// "@path" or a bare path reads a file; anything containing '(' is a literal.
std::string load_map_text(const std::string& arg) {
  bool is_file = !arg.empty() && (arg.front() == '@' || arg.find('(') == std::string::npos);
  if (!is_file) return arg;
  std::string path = arg.front() == '@' ? arg.substr(1) : arg;
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot read map file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (text.size() > kMaxInput) throw Error(ErrorKind::Parse, "map file larger than 1 MB");
  return text;
}

Json family_json(const HermanFamilyParams& p) {
  return Json{{"n", p.n}, {"d", p.d}, {"t1", to_string(p.t1)}, {"t2", to_string(p.t2)}};
}

struct MapArgs {
  std::string map, inverse, family, rotation;

  void attach(CLI::App* sub) {
    sub->add_option("--map", map, "map literal \"(e1, e2)\", or a file (@path)");
    sub->add_option("--inverse", inverse, "inverse of --map, same syntax");
    sub->add_option("--family", family, "f_{n,theta} as n,d,t1,t2 with t = tan(theta/2)");
    sub->add_option("--rotation", rotation, "R_theta as t1,t2");
  }

  SurfaceMap resolve(Json& params) const {
    int given = !map.empty() + !family.empty() + !rotation.empty();
    if (given != 1) usage("give exactly one of --map, --family, --rotation");
    if (!inverse.empty() && map.empty()) usage("--inverse needs --map");
    if (!family.empty()) {
      auto p = parse_family(family);
      params["family"] = family_json(p);
      return build_fn_theta(p);
    }
    if (!rotation.empty()) {
      auto parts = split(rotation, ',');
      if (parts.size() != 2) usage("--rotation expects t1,t2");
      Rational t1 = parse_param(parts[0], "t1"), t2 = parse_param(parts[1], "t2");
      params["rotation"] = Json{{"t1", to_string(t1)}, {"t2", to_string(t2)}};
      return build_rotation(t1, t2);
    }
    SurfaceMap f = parse_map(load_map_text(map));
    params["map"] = to_string(f);
    if (!inverse.empty()) {
      SurfaceMap g = parse_map(load_map_text(inverse));
      if (!is_identity(compose(f, g)) || !is_identity(compose(g, f)))
        usage("--inverse is not the inverse of --map");
      params["inverse"] = to_string(g);
      f = f.with_inverse(g);
    }
    return f;
  }
};

/// Output file opened before any work so a bad path fails fast.
std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  if (path.empty()) return nullptr;
  auto f = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
  if (!*f) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  return f;
}

struct Outcome {
  Json parameters = Json::object();
  Json result = Json::object();
  bool verdict_failure = false;
};

struct Options {
  // verify / xie
  int n = 2, d = 1, symbolic_max_d = 3;
  std::string t1 = "1/3", t2 = "2/5";
  bool matrix_only = false, assume_stable = false;
  // degrees
  int iters = 4;
  // orbit / fixed points / probe
  std::string seed = "0.5,1.5";
  int steps = 1000, grid = 64, seeds = 100;
  double tol = 1e-6, guard = 1e-8, offset = 1e-3, escape_drift = 20.0, ind_radius = 1e-6;
  std::uint64_t rng_seed = 1;
  // dioph
  std::string alpha;
  double beta = 2.0;
  int kmax = 100;
  MapArgs maps;
};

Outcome cmd_verify(const Options& o, std::ostream* csv) {
  Outcome out;
  HermanFamilyParams p{o.n, o.d, parse_param(o.t1, "--t1"), parse_param(o.t2, "--t2")};
  if (p.n < 2 || p.d < 1) usage("need n >= 2 and d >= 1");
  out.parameters = family_json(p);
  out.parameters["symbolic_max_d"] = o.symbolic_max_d;
  VerifyOptions vo;
  vo.symbolic_max_d = o.symbolic_max_d;
  TheoremReport r = verify_theorem(p, vo);
  out.result = to_json(r);
  out.verdict_failure = !r.failures.empty();
  if (csv) {
    bool header = true;
    if (r.ind_f) {
      write_ind_csv(*csv, "f", r.ind_f->computed, header);
      header = false;
    }
    if (r.ind_f_inverse) write_ind_csv(*csv, "f_inverse", r.ind_f_inverse->computed, header);
  }
  return out;
}

Outcome cmd_xie(const Options& o) {
  Outcome out;
  if (o.d < 1) usage("d must be at least 1");
  Rational t1 = parse_param(o.t1, "--t1"), t2 = parse_param(o.t2, "--t2");
  out.parameters = Json{{"d", o.d},           {"n", o.n},
                        {"t1", to_string(t1)}, {"t2", to_string(t2)},
                        {"matrix_only", o.matrix_only}, {"assume_stable", o.assume_stable}};
  AmpleClass L = eigen_class(o.d);
  out.result["lambda"] = to_json(leading_eigenvalue(o.d));
  if (o.matrix_only) {
    std::string stability;
    if (o.assume_stable) {
      stability = "assumed by caller: (f^2)* = (f*)^2";
      out.result["stability"] = Json{{"verdict", "assumed"}};
    } else {
      double s = closed_form_separation(o.n, o.d, t1.get_d(), t2.get_d());
      bool ok = s > 0;
      out.result["stability"] = Json{{"verdict", ok ? "Disjoint" : "Unjustified"},
                                     {"method", "closed-form Ind(f) and Ind(f^-1)"},
                                     {"separation", format_float(s)}};
      if (!ok) {
        out.verdict_failure = true;
        return out;
      }
      stability = "closed-form Ind(f) and Ind(f^-1) separated by " + format_float(s);
    }
    BidegreeMatrix a = herman_matrix(o.d);
    out.result["xie"] = to_json(xie_from_matrices(matrix_power(a, 2), matrix_power(a, 4), L, stability));
    return out;
  }
  HermanFamilyParams p{o.n, o.d, t1, t2};
  SurfaceMap f = build_fn_theta(p);
  DisjointnessCertificate c = ind_disjoint(f);
  out.result["stability"] = to_json(c);
  if (!c.disjoint) {
    out.verdict_failure = true;
    return out;
  }
  XieVerdict v = xie_lower_bound(f, L);
  v.stability = "ind_disjoint certificate";
  out.result["xie"] = to_json(v);
  return out;
}

Json points_json(const std::vector<IndPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

Outcome cmd_ind(const Options& o, std::ostream* csv) {
  Outcome out;
  SurfaceMap f = o.maps.resolve(out.parameters);
  IndSet s = indeterminacy_set(f);
  out.result["ind_f"] = points_json(s.points);
  if (csv) write_ind_csv(*csv, "f", s.points, true);
  if (f.has_inverse()) {
    IndSet si = indeterminacy_set(f.inverse());
    out.result["ind_f_inverse"] = points_json(si.points);
    if (csv) write_ind_csv(*csv, "f_inverse", si.points, false);
    DisjointnessCertificate c = ind_disjoint(f);
    out.result["disjointness"] = to_json(c);
    out.verdict_failure = !c.disjoint;
  }
  return out;
}

Outcome cmd_degrees(const Options& o) {
  Outcome out;
  SurfaceMap f = o.maps.resolve(out.parameters);
  if (o.iters < 1) usage("--iters must be positive");
  out.parameters["iters"] = o.iters;
  DegreeSequence seq = degree_sequence(f, o.iters);
  Json m = Json::array();
  for (const auto& b : seq.matrices) m.push_back(to_json(b));
  out.result["bidegrees"] = m;
  out.result["growth_estimate"] = format_float(seq.growth_estimate);
  return out;
}

Outcome cmd_orbit(const Options& o, std::ostream* csv) {
  Outcome out;
  SurfaceMap f = o.maps.resolve(out.parameters);
  auto seed = parse_pair(o.seed, "--seed");
  if (o.steps < 1) usage("--steps must be positive");
  out.parameters["seed"] = Json::array({format_float(seed[0]), format_float(seed[1])});
  out.parameters["steps"] = o.steps;
  out.parameters["guard"] = format_float(o.guard);
  OrbitRecord rec = orbit(NumericMap(f), {seed[0], seed[1]}, o.steps, o.guard);
  TorusPoint last = rec.point(rec.steps);
  out.result["final"] = Json::array({format_float(last.phi1), format_float(last.phi2)});
  out.result["min_margin"] = format_float(rec.min_margin);
  if (rec.steps >= 100) out.result["rotation_vector"] = to_json(rotation_vector(rec));
  if (csv) write_orbit_csv(*csv, rec);
  return out;
}

Outcome cmd_fixed_points(const Options& o) {
  Outcome out;
  SurfaceMap f = o.maps.resolve(out.parameters);
  if (o.grid < 16) usage("--grid must be at least 16");
  out.parameters["grid"] = o.grid;
  out.parameters["tol"] = format_float(o.tol);
  FixedPointCensus c = fixed_point_census(NumericMap(f), o.grid, o.tol);
  out.result = to_json(c);
  out.verdict_failure = !c.lefschetz_consistent && !c.degenerate_identity;
  return out;
}

Outcome cmd_dioph(const Options& o) {
  Outcome out;
  auto alpha = parse_pair(o.alpha, "--alpha");
  if (o.kmax < 1 || o.kmax > 1000) usage("--kmax must be in 1..1000");
  out.parameters = Json{{"alpha", Json::array({format_float(alpha[0]), format_float(alpha[1])})},
                        {"beta", format_float(o.beta)},
                        {"kmax", o.kmax}};
  out.result = to_json(diophantine_check(alpha, o.beta, o.kmax));
  return out;
}

Outcome cmd_probe(const Options& o, std::ostream* csv) {
  Outcome out;
  SurfaceMap f = o.maps.resolve(out.parameters);
  if (o.seeds < 1 || o.steps < 1) usage("--seeds and --steps must be positive");
  ProbeOptions po;
  po.offset = o.offset;
  po.seeds = o.seeds;
  po.steps = o.steps;
  po.rng_seed = o.rng_seed;
  po.escape_drift = o.escape_drift;
  po.ind_radius = o.ind_radius;
  out.parameters["offset"] = format_float(po.offset);
  out.parameters["seeds"] = po.seeds;
  out.parameters["steps"] = po.steps;
  out.parameters["rng_seed"] = po.rng_seed;
  out.parameters["escape_drift"] = format_float(po.escape_drift);
  out.parameters["ind_radius"] = format_float(po.ind_radius);
  ProbeReport r = complex_probe(f, po);
  out.result = to_json(r);
  out.result["note"] = "heuristic evidence near the real torus, not a proof of Fatou membership";
  out.verdict_failure = !r.all_bounded;
  if (csv) write_probe_csv(*csv, r);
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric checks for birational maps of P1 x P1", "biratio"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);

  Options o;
  std::string out_path, csv_path;
  auto common = [&](CLI::App* sub, bool csv) {
    sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    if (csv) sub->add_option("--csv", csv_path, "write plot data here");
  };

  auto* verify = app.add_subcommand("verify", "full verification pipeline for f_{n,theta}");
  verify->add_option("--n", o.n)->required();
  verify->add_option("--d", o.d)->required();
  verify->add_option("--t1", o.t1, "tan(theta1/2), rational")->required();
  verify->add_option("--t2", o.t2, "tan(theta2/2), rational")->required();
  verify->add_option("--symbolic-max-d", o.symbolic_max_d, "largest d composed symbolically");
  common(verify, true);

  auto* xie = app.add_subcommand("xie", "dynamical degree lower bound");
  xie->add_option("--d", o.d)->required();
  xie->add_flag("--matrix-only", o.matrix_only, "use bidegree matrices instead of composing maps");
  xie->add_flag("--assume-stable", o.assume_stable, "skip the stability check (recorded in the report)");
  xie->add_option("--n", o.n, "family member used for the stability check");
  xie->add_option("--t1", o.t1);
  xie->add_option("--t2", o.t2);
  common(xie, false);

  auto* ind = app.add_subcommand("ind", "indeterminacy sets and disjointness");
  common(ind, true);
  auto* degrees = app.add_subcommand("degrees", "bidegrees of iterates by composition");
  degrees->add_option("--iters", o.iters);
  common(degrees, false);
  auto* orbit_cmd = app.add_subcommand("orbit", "orbit on the real torus");
  orbit_cmd->add_option("--seed", o.seed, "phi1,phi2");
  orbit_cmd->add_option("--steps", o.steps);
  orbit_cmd->add_option("--guard", o.guard);
  common(orbit_cmd, true);
  auto* fixed = app.add_subcommand("fixed-points", "fixed point census on the real torus");
  fixed->add_option("--grid", o.grid);
  fixed->add_option("--tol", o.tol);
  common(fixed, false);
  auto* dioph = app.add_subcommand("dioph", "Diophantine constant of a rotation vector");
  dioph->add_option("--alpha", o.alpha, "a1,a2")->required();
  dioph->add_option("--beta", o.beta);
  dioph->add_option("--kmax", o.kmax);
  common(dioph, false);
  auto* probe = app.add_subcommand("probe", "complex neighbourhood probe");
  probe->add_option("--offset", o.offset);
  probe->add_option("--seeds", o.seeds);
  probe->add_option("--steps", o.steps);
  probe->add_option("--rng-seed", o.rng_seed);
  probe->add_option("--escape-drift", o.escape_drift);
  probe->add_option("--ind-radius", o.ind_radius);
  common(probe, true);
  for (auto* sub : {ind, degrees, orbit_cmd, fixed, probe}) o.maps.attach(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    auto report_file = open_output(out_path);
    auto csv_file = open_output(csv_path);
    auto start = std::chrono::steady_clock::now();
    Outcome r;
    const std::string name = sub->get_name();
    if (name == "verify") r = cmd_verify(o, csv_file.get());
    else if (name == "xie") r = cmd_xie(o);
    else if (name == "ind") r = cmd_ind(o, csv_file.get());
    else if (name == "degrees") r = cmd_degrees(o);
    else if (name == "orbit") r = cmd_orbit(o, csv_file.get());
    else if (name == "fixed-points") r = cmd_fixed_points(o);
    else if (name == "dioph") r = cmd_dioph(o);
    else r = cmd_probe(o, csv_file.get());
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    int code = r.verdict_failure ? kExitVerdictFailure : kExitOk;
    Json report{{"command", name},
                {"parameters", r.parameters},
                {"result", r.result},
                {"status", r.verdict_failure ? "verdict_failure" : "ok"},
                {"exit_code", code},
                {"tool_version", kToolVersion},
                {"timings", Json{{"total_seconds", format_float(seconds)}}}};
    if (csv_file) {
      csv_file->flush();
      if (!*csv_file) throw Error(ErrorKind::Io, "write to '" + csv_path + "' failed");
    }
    if (report_file) {
      emit_report(*report_file, report);
      report_file->flush();
      if (!*report_file) throw Error(ErrorKind::Io, "write to '" + out_path + "' failed");
    } else {
      emit_report(out, report);
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace biratio

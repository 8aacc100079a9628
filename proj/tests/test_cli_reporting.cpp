#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "biratio/cli.hpp"
#include "biratio/constructions.hpp"
#include "biratio/expression.hpp"
#include "biratio/report.hpp"
#include "doctest.h"

using namespace biratio;
using P = BiPoly<Rational>;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  fs::path p = fs::temp_directory_path() / ("biratio_cli_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Random expression text over a small grammar-complete alphabet.
class ExprGen {
 public:
  explicit ExprGen(unsigned seed) : rng_(seed) {}

  std::string operator()(int depth) {
    if (depth == 0 || pick(4) == 0) return atom();
    switch (pick(7)) {
      case 0: return (*this)(depth - 1) + " + " + (*this)(depth - 1);
      case 1: return (*this)(depth - 1) + "-" + (*this)(depth - 1);
      case 2: return (*this)(depth - 1) + "*" + (*this)(depth - 1);
      case 3: return (*this)(depth - 1) + "/" + (*this)(depth - 1);
      case 4: return "(" + (*this)(depth - 1) + ")^" + std::to_string(pick(4));
      case 5: return "-" + (*this)(depth - 1);
      default: return "(" + (*this)(depth - 1) + ")";
    }
  }

  Rational rational() { return make_rational(Integer(int(pick(19)) - 9), Integer(int(pick(5)) + 1)); }

 private:
  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }

  std::string atom() {
    switch (pick(5)) {
      case 0: return "x";
      case 1: return "y";
      case 2: return std::to_string(pick(10));
      case 3: return std::to_string(pick(10)) + "." + std::to_string(pick(100));
      default: return "x^" + std::to_string(pick(3));
    }
  }

  std::mt19937 rng_;
};

bool same_function(const RationalFunction& a, const RationalFunction& b) { return a.num * b.den == b.num * a.den; }

}  // namespace

TEST_CASE("parse_map examples") {
  SurfaceMap s = parse_map("(y, x)");
  CHECK(s == SurfaceMap::swap());
  CHECK(bidegree_matrix(s) == make_bidegree(0, 1, 1, 0));
  CHECK(parse_map("((x^2+x+1)*y/(x^2+1), x)") == build_gn(2, 1));
  CHECK_THROWS_WITH_AS(parse_map("(x/0, y)"), doctest::Contains("ZeroDenominator"), Error);
  // Cancellation happens before the map is built.
  CHECK(parse_map("((x^2-1)/(x-1) - 1, y*y/y)") == SurfaceMap::identity());
}

TEST_CASE("parser precedence and literals") {
  auto at = [](const char* text, int x, int y) { return evaluate_at(parse_expression(text), x, y); };
  CHECK(at("-x^2", 3, 0) == -9);
  CHECK(at("2^3^2", 0, 0) == 512);
  CHECK(at("1/2*x", 4, 0) == 2);
  CHECK(at("x - y - 1", 5, 2) == 2);
  CHECK(at("x/y/2", 8, 2) == 2);
  CHECK(at("0.125 + .5", 0, 0) == Rational(5, 8));
  CHECK(at("--x", 7, 0) == 7);
  CHECK(at("-2^2", 0, 0) == -4);
  CHECK(at("(-2)^2", 0, 0) == 4);
  CHECK(at("x^0", 0, 0) == 1);
}

TEST_CASE("parser errors carry a position") {
  auto error_of = [](const char* text) {
    try {
      parse_map(text);
    } catch (const Error& e) {
      return std::pair<ErrorKind, std::string>{e.kind(), e.what()};
    }
    return std::pair<ErrorKind, std::string>{ErrorKind::Usage, "no error"};
  };
  auto [k1, m1] = error_of("(x +, y)");
  CHECK(k1 == ErrorKind::Parse);
  CHECK(m1.find("column 5") != std::string::npos);
  CHECK(error_of("(sqrt(2)*x, y)").first == ErrorKind::Parse);
  CHECK(error_of("(x^-1, y)").first == ErrorKind::Parse);
  CHECK(error_of("(x^y, y)").first == ErrorKind::Parse);
  CHECK(error_of("(z, y)").first == ErrorKind::Parse);
  CHECK(error_of("(x, y").first == ErrorKind::Parse);
  CHECK(error_of("(x, y) x").first == ErrorKind::Parse);
  CHECK(error_of("(1..2, y)").first == ErrorKind::Parse);
  CHECK(error_of("(x)").first == ErrorKind::Parse);
  CHECK(error_of("(0, y)").first == ErrorKind::Usage);  // constants are fine here
  CHECK(error_of("(x/(y-y), y)").first == ErrorKind::ZeroDenominator);
  std::string big = "(x" + std::string((1 << 20) + 1, ' ') + ", y)";
  CHECK(error_of(big.c_str()).first == ErrorKind::Parse);
}

TEST_CASE("property: evaluation agrees with exact algebra at rational points") {
  ExprGen gen(17);
  int checked = 0, degenerate = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = gen(4);
    ExprPtr e = parse_expression(text);
    RationalFunction f;
    try {
      f = evaluate(e);
    } catch (const Error& err) {
      REQUIRE(err.kind() == ErrorKind::ZeroDenominator);
      ++degenerate;
      continue;
    }
    for (int k = 0; k < 4; ++k) {
      Rational x = gen.rational(), y = gen.rational();
      Rational den = f.den(x, y);
      Rational direct;
      try {
        direct = evaluate_at(e, x, y);
      } catch (const Error&) {
        continue;  // an intermediate divisor vanishes here
      }
      if (den == 0) continue;
      INFO(text);
      CHECK(direct == f.num(x, y) / den);
      ++checked;
    }
  }
  CHECK(checked > 500);
  CHECK(degenerate < 150);
}

TEST_CASE("property: parse of print is the same function") {
  ExprGen gen(29);
  for (int trial = 0; trial < 200; ++trial) {
    ExprPtr e = parse_expression(gen(4));
    std::string printed = to_string(e);
    ExprPtr back = parse_expression(printed);
    CHECK(to_string(back) == printed);
    std::optional<RationalFunction> fe, fb;
    try {
      fe = evaluate(e);
    } catch (const Error&) {
    }
    try {
      fb = evaluate(back);
    } catch (const Error&) {
    }
    REQUIRE(fe.has_value() == fb.has_value());
    if (fe) CHECK(same_function(*fe, *fb));
  }
}

TEST_CASE("property: builder maps round-trip through the printer") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 7);
  int tested = 0;
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      SurfaceMap g = build_gn(n, d);
      CHECK(parse_map(to_string(g)) == g);
      CHECK(parse_map(to_string(g.inverse())) == g.inverse());
      Rational t1 = make_rational(num(rng), den(rng)), t2 = make_rational(num(rng), den(rng));
      SurfaceMap r = build_rotation(t1, t2);
      CHECK(parse_map(to_string(r)) == r);
      if (d <= 2 || n == 2) {  // about 3 s per instance at d = 3
        SurfaceMap f = build_fn_theta({n, d, t1, t2});
        CHECK(parse_map(to_string(f)) == f);
        CHECK(parse_map(to_string(f.inverse())) == f.inverse());
      }
      tested++;
    }
  CHECK(tested == 9);
  CHECK(parse_map(to_string(SurfaceMap::identity())) == SurfaceMap::identity());
  CHECK(parse_map(to_string(SurfaceMap::swap())) == SurfaceMap::swap());
}

TEST_CASE("float format") {
  CHECK(format_float(1.0) == "1.000000000000e+00");
  CHECK(format_float(-0.0) == "0.000000000000e+00");
  CHECK(format_float(-2.5e-7) == "-2.500000000000e-07");
  CHECK(format_float(1.0 / 0.0) == "inf");
}

TEST_CASE("xie subcommand") {
  Run a = run({"xie", "--d", "16552", "--matrix-only"});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("lambda_lower_bound > 1") != std::string::npos);
  CHECK(a.json()["result"]["xie"]["verdict"] == "Certified");
  Run b = run({"xie", "--d", "16551", "--matrix-only"});
  CHECK(b.code == kExitOk);
  CHECK(b.json()["result"]["xie"]["verdict"] == "Inconclusive");
  CHECK(b.out.find("lambda_lower_bound > 1") == std::string::npos);
  // The exact ratio is lambda^2 = 2d^2 + 1 + 2d sqrt(d^2 + 1).
  CHECK(a.json()["result"]["xie"]["ratio"]["exact"] == "547937409+33104*sqrt(273968705)");
  Run c = run({"xie", "--d", "16552", "--matrix-only", "--assume-stable"});
  CHECK(c.json()["result"]["xie"]["stability"] == "assumed by caller: (f^2)* = (f*)^2");
  // Symbolic path at d = 1 composes the map.
  Run s = run({"xie", "--d", "1"});
  CHECK(s.code == kExitOk);
  CHECK(s.json()["result"]["stability"]["verdict"] == "Disjoint");
  CHECK(s.json()["result"]["xie"]["verdict"] == "Inconclusive");
}

TEST_CASE("ind subcommand") {
  Run a = run({"ind", "--map", "(y, y/x)", "--inverse", "(x/y, x)"});
  CHECK(a.code == kExitVerdictFailure);
  Json j = a.json();
  CHECK(j["result"]["disjointness"]["verdict"] == "Overlap");
  CHECK(j["result"]["disjointness"]["overlap"].size() == 2);
  CHECK(j["status"] == "verdict_failure");
  Run b = run({"ind", "--family", "2,1,1/3,2/5"});
  CHECK(b.code == kExitOk);
  CHECK(b.json()["result"]["disjointness"]["verdict"] == "Disjoint");
  CHECK(b.json()["result"]["ind_f"].size() == 8);
  Run c = run({"ind", "--map", "(y, y/x)"});
  CHECK(c.code == kExitOk);
  CHECK(!c.json()["result"].contains("disjointness"));
  // Map from a file.
  fs::path dir = scratch();
  std::ofstream(dir / "m.txt") << "(y, y/x)\n";
  Run d = run({"ind", "--map", "@" + (dir / "m.txt").string()});
  CHECK(d.code == kExitOk);
  CHECK(d.json()["parameters"]["map"] == "(y, (y)/(x))");
}

TEST_CASE("error exits") {
  CHECK(run({}).code == kExitError);
  CHECK(run({"frobnicate"}).code == kExitError);
  CHECK(run({"xie"}).code == kExitError);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"xie", "--d", "5", "--out", "/nonexistent-dir/r.json"}).code == kExitError);
  Run p = run({"ind", "--map", "(x +, y)"});
  CHECK(p.code == kExitError);
  CHECK(p.err.find("ParseError") != std::string::npos);
  CHECK(p.err.find("column") != std::string::npos);
  CHECK(run({"ind", "--map", "(x/0, y)"}).code == kExitError);
  CHECK(run({"ind", "--map", "(y, x)", "--inverse", "(x, y)"}).code == kExitError);
  CHECK(run({"ind", "--map", "(y, x)", "--family", "2,1,0,0"}).code == kExitError);
  CHECK(run({"orbit", "--family", "1,1,0,0"}).code == kExitError);
  CHECK(run({"dioph", "--alpha", "1"}).code == kExitError);
  CHECK(run({"ind", "--map", "/nonexistent-map-file"}).code == kExitError);
}

TEST_CASE("reports are deterministic and schema shaped") {
  fs::path dir = scratch();
  auto without_timing = [](const fs::path& p) {
    Json j = Json::parse(read_file(p));
    j.erase("timings");
    return j.dump(2);
  };
  std::vector<std::string> args{"verify", "--n", "2", "--d", "1", "--t1", "1/3", "--t2", "2/5"};
  auto a = args, b = args;
  a.insert(a.end(), {"--out", (dir / "a.json").string(), "--csv", (dir / "a.csv").string()});
  b.insert(b.end(), {"--out", (dir / "b.json").string()});
  CHECK(run(a).code == kExitOk);
  CHECK(run(b).code == kExitOk);
  CHECK(without_timing(dir / "a.json") == without_timing(dir / "b.json"));
  std::string csv = read_file(dir / "a.csv");
  CHECK(csv.rfind("set,coordinate,x_inf,x_re,x_im,y_inf,y_re,y_im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);

  std::ifstream schema_file(std::string(BIRATIO_SOURCE_DIR) + "/docs/report.schema.json");
  Json schema = Json::parse(schema_file);
  Json report = Json::parse(read_file(dir / "a.json"));
  for (const auto& key : schema["required"]) CHECK(report.contains(key.get<std::string>()));
  for (const auto& [key, value] : report.items()) CHECK(schema["properties"].contains(key));
  CHECK(report["tool_version"] == kToolVersion);
  CHECK(report["result"]["stages"]["indeterminacy"]["f"]["matching"] == "factored");
}

TEST_CASE("dynamics subcommands") {
  fs::path dir = scratch();
  Run o = run({"orbit", "--family", "1000,1,1/3,2/5", "--seed", "0.5,1.5", "--steps", "200", "--csv",
               (dir / "o.csv").string()});
  CHECK(o.code == kExitOk);
  std::string csv = read_file(dir / "o.csv");
  CHECK(csv.rfind("step,phi1,phi2,lift1,lift2\n0,5.000000000000e-01,1.500000000000e+00,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 202);

  Run fp = run({"fixed-points", "--rotation", "0,1/2", "--grid", "16"});
  CHECK(fp.code == kExitOk);
  CHECK(fp.json()["result"]["degenerate_identity"] == true);
  Run twist = run({"fixed-points", "--map", "(y, -x)", "--grid", "16"});
  CHECK(twist.code == kExitVerdictFailure);

  Run dio = run({"dioph", "--alpha", "3.141592653589793,3.141592653589793", "--kmax", "10"});
  CHECK(dio.code == kExitOk);
  CHECK(dio.json()["result"]["c_emp"] == "0.000000000000e+00");

  Run pr = run({"probe", "--family", "1000,1,1/3,2/5", "--seeds", "4", "--steps", "200", "--csv",
                (dir / "p.csv").string()});
  CHECK(pr.code == kExitOk);
  CHECK(read_file(dir / "p.csv").rfind("step,im_x,im_y,dist_to_ind\n", 0) == 0);
  Run far = run({"probe", "--family", "1000,1,1/3,2/5", "--offset", "10", "--seeds", "20", "--steps", "2000"});
  CHECK(far.code == kExitVerdictFailure);

  Run deg = run({"degrees", "--family", "2,1,1/3,2/5", "--iters", "2"});
  CHECK(deg.code == kExitOk);
  CHECK(deg.json()["result"]["bidegrees"][1] == "[[29,12],[12,5]]");
}

TEST_CASE("installed binary honours the exit-code contract") {
  auto status = [](const std::string& args) {
    std::string cmd = std::string(BIRATIO_CLI) + " " + args + " > /dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("xie --d 16552 --matrix-only") == 0);
  CHECK(status("xie --d 16551 --matrix-only") == 0);
  CHECK(status("ind --map '(y, y/x)' --inverse '(x/y, x)'") == 2);
  CHECK(status("xie --d 3 --out /nonexistent-dir/r.json") == 1);
  CHECK(status("no-such-command") == 1);
}

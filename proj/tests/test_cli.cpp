#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "freetransform/cli.hpp"
#include "freetransform/errors.hpp"

using namespace freetransform;
namespace cli = freetransform::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_tmp(const std::string& name, const std::string& body) {
  const std::string path = std::string(FT_TEST_TMPDIR) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("format_number") {
  CHECK(cli::format_number(1.0) == "1.0");
  CHECK(cli::format_number(-1.0) == "-1.0");
  CHECK(cli::format_number(0.0) == "0.0");
  CHECK(cli::format_number(-0.0) == "0.0");
  CHECK(cli::format_number(0.5) == "0.5");
  CHECK(cli::format_number(0.1) == "0.10000000000000001");
  CHECK(cli::format_number(1e-10) == "1e-10");
  CHECK(cli::format_number(123456789.0) == "123456789.0");
  for (double v : {std::acos(-1.0), -2.0 / 3.0, 1e300, 2.2250738585072014e-308}) {
    CHECK(std::stod(cli::format_number(v)) == v);
  }
}

TEST_CASE("geometric_grid") {
  const std::vector<double> g = cli::geometric_grid(0.5, 8.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.5);
  CHECK(g.back() == 8.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] / g[i - 1] == doctest::Approx(2.0));
  CHECK(cli::geometric_grid(1.0, 4.0, 1) == std::vector<double>{1.0});
  CHECK_THROWS_AS(cli::geometric_grid(0.0, 1.0, 3), InvalidInput);
  CHECK_THROWS_AS(cli::geometric_grid(2.0, 1.0, 3), InvalidInput);
  CHECK_THROWS_AS(cli::geometric_grid(1.0, 2.0, 0), InvalidInput);
}

TEST_CASE("parse_triple_json") {
  const LevyTriple tr = cli::parse_triple_json(R"({"a": 1, "sigma2": 2, "atoms": [{"x": -1.5, "w": 0.25}]})");
  CHECK(tr.drift() == 1.0);
  CHECK(tr.gauss_var() == 2.0);
  REQUIRE(tr.levy_atoms().size() == 1);
  CHECK(tr.levy_atoms()[0].x == -1.5);
  CHECK(cli::parse_triple_json("{}") == LevyTriple());

  auto message = [](const char* text) {
    try {
      cli::parse_triple_json(text);
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"a": "x"})").find("a:") == 0);
  CHECK(message(R"({"sigma2": -1})").find("sigma2") == 0);
  CHECK(message(R"({"mu": 1})").find("mu") == 0);
  CHECK(message(R"({"atoms": {}})").find("atoms") == 0);
  CHECK(message(R"({"atoms": [{"x": 1, "w": 1}, {"x": 2}]})").find("atoms[1].w") == 0);
  CHECK(message(R"({"atoms": [{"x": 0, "w": 1}]})").find("atoms[0].x") == 0);
  CHECK(message(R"({"atoms": [{"x": 1, "w": 0}]})").find("atoms[0].w") == 0);
  CHECK(message(R"({"a": 1,)").find("malformed") != std::string::npos);
  CHECK(message("[1]").find("object") != std::string::npos);
}

TEST_CASE("parse_linf_json") {
  const LInfSpec s = cli::parse_linf_json(R"({"c": 0.5, "atoms": [{"x": 2, "w": 1}]})");
  CHECK(s.shift() == 0.5);
  CHECK_THROWS_AS(cli::parse_linf_json(R"({"atoms": [{"x": -2, "w": 1}]})"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_linf_json(R"({"a": 1})"), InvalidInput);
}

TEST_CASE("parse_grid") {
  const cli::GridSpec g = cli::parse_grid("-1:2:4,0.5:1:3");
  CHECK(g.re_min == -1.0);
  CHECK(g.re_max == 2.0);
  CHECK(g.re_n == 4);
  CHECK(g.im_min == 0.5);
  CHECK(g.im_n == 3);
  for (const char* bad : {"", "0:1:2", "0:1,0:1:2", "0:1:0,0:1:2", "a:1:2,0:1:2", "1:0:2,0:1:2"}) {
    CHECK_THROWS_AS(cli::parse_grid(bad), InvalidInput);
  }
}

TEST_CASE("eval lk k=0 on a Gaussian") {
  const std::string in = write_tmp("gauss.json", R"({"a": 1, "sigma2": 2})");
  const Outcome o = run({"eval", "--class", "lk", "--k", "0", "--input", in});
  CHECK(o.code == 0);
  CHECK(o.out == "t,re_V,im_V\n1.0,1.0,-1.0\n");
}

TEST_CASE("eval id on a pure drift") {
  const std::string in = write_tmp("drift.json", R"({"a": 5})");
  const Outcome o =
      run({"eval", "--class", "id", "--input", in, "--t-min", "0.1", "--t-max", "10", "--steps", "7"});
  CHECK(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 8);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    CHECK(f[1] == 5.0);
    CHECK(f[2] == 0.0);
  }
}

TEST_CASE("eval linf with a Rademacher G") {
  const std::string in =
      write_tmp("rad.json", R"({"c": 0.25, "atoms": [{"x": 1, "w": 0.5}, {"x": -1, "w": 0.5}]})");
  const Outcome o =
      run({"eval", "--class", "linf", "--input", in, "--t-min", "0.5", "--t-max", "4", "--steps", "4"});
  CHECK(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    CHECK(f[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(f[2] == doctest::Approx(-std::acos(-1.0) / 2.0).epsilon(1e-15));
  }
}

TEST_CASE("eval routes agree and output is deterministic") {
  const std::string in =
      write_tmp("mixed.json", R"({"a": 0.3, "sigma2": 0.7, "atoms": [{"x": 1, "w": 0.5}, {"x": -2.5, "w": 0.2}]})");
  for (const char* cls : {"uks", "ubk", "lk", "id"}) {
    const std::vector<std::string> base = {"eval", "--class", cls, "--k", "2", "--input", in,
                                           "--t-min", "0.5", "--t-max", "2", "--steps", "3"};
    const Outcome a = run(base);
    const Outcome b = run(base);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::vector<std::string> quad = base;
    quad.insert(quad.end(), {"--route", "quadrature", "--tol", "1e-9"});
    const Outcome q = run(quad);
    CHECK(q.code == 0);
    const auto ra = lines(a.out), rq = lines(q.out);
    REQUIRE(ra.size() == rq.size());
    for (std::size_t i = 1; i < ra.size(); ++i) {
      const auto fa = fields(ra[i]), fq = fields(rq[i]);
      CHECK(std::hypot(fa[1] - fq[1], fa[2] - fq[2]) < 1e-6);
    }
  }
}

TEST_CASE("eval writes --out") {
  const std::string in = write_tmp("gauss2.json", R"({"a": 1, "sigma2": 2})");
  const std::string out = std::string(FT_TEST_TMPDIR) + "/eval_out.csv";
  const Outcome o = run({"eval", "--class", "lk", "--k", "0", "--input", in, "--out", out});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream f(out);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == "t,re_V,im_V\n1.0,1.0,-1.0\n");
}

TEST_CASE("input errors exit 2 and name the field") {
  const std::string bad = write_tmp("bad.json", R"({"a": 1, "atoms": [{"x": 1, "w": "heavy"}]})");
  Outcome o = run({"eval", "--class", "id", "--input", bad});
  CHECK(o.code == 2);
  CHECK(o.err.find("atoms[0].w") != std::string::npos);
  CHECK(o.out.empty());

  const std::string ok = write_tmp("ok.json", "{}");
  CHECK(run({"eval", "--class", "id", "--input", std::string(FT_TEST_TMPDIR) + "/missing.json"}).code == 2);
  CHECK(run({"eval", "--class", "nope", "--input", ok}).code == 2);
  CHECK(run({"eval", "--class", "ubk", "--k", "0", "--input", ok}).code == 2);
  CHECK(run({"eval", "--class", "id", "--input", ok, "--t-min", "-1"}).code == 2);
  CHECK(run({"eval", "--class", "id", "--input", ok, "--t-min", "3", "--t-max", "1"}).code == 2);
  CHECK(run({"eval", "--class", "id", "--input", ok, "--steps", "0"}).code == 2);
  CHECK(run({"eval", "--class", "id", "--input", ok, "--route", "quadrature", "--tol", "-1"}).code == 2);
  CHECK(run({"eval", "--class", "linf", "--input", ok, "--route", "quadrature"}).code == 2);
  CHECK(run({"verify", "bogus"}).code == 2);
  CHECK(run({"kernels", "--family", "other", "--k", "1"}).code == 2);
  CHECK(run({"kernels", "--family", "sself", "--k", "0"}).code == 2);
  CHECK(run({"kernels", "--family", "sself", "--k", "1", "--grid", "0:1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("domain errors exit 3") {
  const Outcome o = run({"kernels", "--family", "lclass", "--k", "1", "--grid", "-3:-2:2,0:0:1"});
  CHECK(o.code == 3);
  CHECK(o.out.empty());
  CHECK(!o.err.empty());
}

TEST_CASE("verify") {
  Outcome o = run({"verify", "pick"});
  CHECK(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 1);
  std::istringstream in(rows[0]);
  std::string status, name;
  double dev = 1.0, tol = 0.0;
  in >> status >> name >> dev >> tol;
  CHECK(status == "PASS");
  CHECK(name == "pick.lemma_identity");
  CHECK(dev <= 1e-12);
  CHECK(tol == 1e-12);

  o = run({"verify", "laplace"});
  CHECK(o.code == 0);
  CHECK(o.out.find("PASS laplace.gaussian_vs_closed_form") != std::string::npos);

  o = run({"verify", "limits"});
  CHECK(o.code == 0);
  for (const char* k : {"k=10 ", "k=100 ", "k=1000 "}) CHECK(o.out.find(k) != std::string::npos);
}

TEST_CASE("kernels table") {
  Outcome o = run({"kernels", "--family", "sself", "--k", "1"});
  CHECK(o.code == 0);
  auto rows = lines(o.out);
  REQUIRE(rows.size() == 26);
  CHECK(rows[0] == "re_z,im_z,re_g,im_g,re_g_quad,im_g_quad,abs_diff");
  const auto origin = fields(rows[1]);
  CHECK(origin[0] == 0.0);
  CHECK(origin[1] == 0.0);
  CHECK(origin[2] == 0.5);
  CHECK(origin[6] < 1e-10);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    if (f[1] > 0.0) CHECK(f[3] < 0.0);
    CHECK(f[6] < 1e-8);
  }

  o = run({"kernels", "--family", "ubeta", "--k", "1", "--grid", "0:0:1,0:0:1"});
  CHECK(o.code == 0);
  rows = lines(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(fields(rows[1])[2] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("tolerance resolution and the environment override") {
  ::unsetenv(cli::kTolEnv);
  CHECK(cli::resolve_tolerance(std::nullopt, 1e-10) == 1e-10);
  CHECK(cli::resolve_tolerance(1e-6, 1e-10) == 1e-6);
  ::setenv(cli::kTolEnv, "1e-7", 1);
  CHECK(cli::resolve_tolerance(std::nullopt, 1e-10) == 1e-7);
  CHECK(cli::resolve_tolerance(1e-6, 1e-10) == 1e-6);
  ::setenv(cli::kTolEnv, "junk", 1);
  CHECK_THROWS_AS(cli::resolve_tolerance(std::nullopt, 1e-10), InvalidInput);
  CHECK(run({"kernels", "--family", "sself", "--k", "1"}).code == 2);
  ::setenv(cli::kTolEnv, "-1", 1);
  CHECK_THROWS_AS(cli::resolve_tolerance(std::nullopt, 1e-10), InvalidInput);
  ::unsetenv(cli::kTolEnv);
}

TEST_CASE("info") {
  const Outcome o = run({"info"});
  CHECK(o.code == 0);
  CHECK(o.out.find("suites: kernels") != std::string::npos);
  CHECK(o.out.find(cli::kTolEnv) != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE

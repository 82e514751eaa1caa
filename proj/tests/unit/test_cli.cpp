#include <cmath>
#include <cstdlib>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "hypersint/potential1.hpp"

using namespace hypersint;
using namespace hypersint::cli;

namespace {

RunConfig fixture() {
  RunConfig c;
  c.alpha = 1.0;
  c.beta = 1.0 / std::sqrt(2.0);
  c.gamma = 2.0 * std::sqrt(2.0);
  return c;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string c;
  while (std::getline(ss, c, ',')) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("grid and list parsing") {
  const GridSpec g = parse_grid("50x40:-1,2,0.5,3");
  CHECK(g.n1 == 50);
  CHECK(g.n2 == 40);
  REQUIRE(g.window);
  CHECK((*g.window)[0] == -1.0);
  CHECK((*g.window)[3] == 3.0);
  CHECK(!parse_grid("7x9").window);
  CHECK_THROWS_AS(parse_grid("7by9"), CliError);
  CHECK_THROWS_AS(parse_grid("7x9:1,2,3"), CliError);
  CHECK_THROWS_AS(parse_grid("7x9:1,2,3,x"), CliError);
  CHECK(parse_ints("2,0") == std::vector<int>{2, 0});
  CHECK_THROWS_AS(parse_ints("1.5"), CliError);
  const auto cp = parse_chart_params("0.3,1.2,-0.1");
  CHECK(cp.e3 == -0.1);
}

TEST_CASE("validation windows") {
  RunConfig c = fixture();
  CHECK_NOTHROW(validate(c));
  c.potential = Potential::v2;
  c.chart = Chart::horicyclic;
  CHECK_THROWS_AS(validate(c), CliError);
  c = fixture();
  c.gamma.reset();
  try {
    validate(c);
    FAIL("expected an error");
  } catch (const CliError& e) {
    CHECK(e.code() == 2);
    CHECK(std::string(e.what()).find("gamma") != std::string::npos);
  }
}

TEST_CASE("float formatting round-trips") {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, -0.0}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(format_double(NAN) == "nan");
  Table t;
  t.columns = {"x", "tag"};
  t.meta["k"] = 0.1;
  t.add({0.1, std::string("a,b")});
  CHECK(render(t, Format::csv) == "# k=0.10000000000000001\nx,tag\n0.10000000000000001,\"a,b\"\n");
  CHECK(render(t, Format::json).find("\"x\": 0.10000000000000001") != std::string::npos);
  CHECK_THROWS(t.add({1.0}));
}

TEST_CASE("grid values equal direct evaluation bit for bit") {
  RunConfig c = fixture();
  c.quantum = {1, 1};
  c.grid = parse_grid("6x5:0.2,1.8,-1,1");
  const std::string csv = render(cmd_wavefunction(c), Format::csv);
  std::stringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  std::getline(ss, line);
  CHECK(line == "u1,u2,re,im,abs2");
  const P1Params p = P1Params::make(*c.alpha, *c.beta, *c.gamma);
  int rows = 0;
  while (std::getline(ss, line)) {
    const auto f = cells(line);
    const double u1 = std::strtod(f[0].c_str(), nullptr), u2 = std::strtod(f[1].c_str(), nullptr);
    CHECK(std::strtod(f[2].c_str(), nullptr) == p1_wf_equidistant(p, 1, 1, u1, u2));
    ++rows;
  }
  CHECK(rows == 30);
}

TEST_CASE("spectrum records") {
  const Table t = cmd_spectrum(fixture());
  REQUIRE(t.rows.size() == 6);
  CHECK(std::abs(std::get<double>(t.rows[0][1]) + 10.0) < 1e-12);
  CHECK(std::abs(std::get<double>(t.rows[5][1])) < 1e-12);
  RunConfig empty = fixture();
  empty.beta = 10.0;
  empty.gamma = 1.0;
  const Table e = cmd_spectrum(empty);
  REQUIRE(e.rows.size() == 1);
  CHECK(std::get<std::string>(e.rows[0][6]) == "no bound states");
}

TEST_CASE("verify flags printed forms without failing") {
  RunConfig c = fixture();
  c.suite = "interbasis";
  bool ok = false;
  const Table t = cmd_verify(c, ok);
  CHECK(ok);
  int discrepancies = 0;
  for (const auto& r : t.rows)
    if (std::get<std::string>(r[6]) == "discrepancy") ++discrepancies;
  CHECK(discrepancies > 0);
  c.suite = "nonsense";
  CHECK_THROWS_AS(cmd_verify(c, ok), CliError);
  c.suite = "linear-relations";
  c.potential = Potential::v2;
  c.alpha = 0.1, c.beta = 3.0, c.gamma = 1.0;
  CHECK_THROWS_AS(cmd_verify(c, ok), CliError);
}

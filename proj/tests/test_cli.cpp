#include "app/commands.hpp"
#include "app/config.hpp"
#include "app/report.hpp"

#include "rhoqes/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>

using namespace rhoqes;
using namespace rhoqes::app;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::string& cmd, const RunConfig& c, std::vector<std::string> suites = {}) {
  std::ostringstream out, err;
  const int code = run_command(cmd, c, out, err, suites);
  return {code, out.str(), err.str()};
}

RunConfig from(const char* text) { return parse_config(json::parse(text)); }

}  // namespace

TEST_CASE("config: unknown keys and bad values are rejected") {
  CHECK_THROWS_AS(from(R"({"masses":["1","1","1","1"],"colour":"red"})"), ConfigError);
  CHECK_THROWS_AS(from(R"({"masses":["1","1","1"]})"), ConfigError);
  CHECK_THROWS_AS(from(R"({"d":1.5})"), ConfigError);
  const auto c = from(R"({"masses":["1","2",3,"4"],"d":"7/2","N":3,"seed":9})");
  CHECK(c.masses[2] == "3");
  CHECK(resolve(c).d == Rational(7, 2));
  CHECK(parse_config(to_json(c)).d == "7/2");
}

TEST_CASE("config: infinite masses must match the variant") {
  CHECK(run("prep", from(R"({"masses":["inf","inf","1","1"]})")).code == ExitCode::config_error);
  CHECK(run("prep", from(R"({"masses":["inf","inf","1","1"],"variant":"molecular"})")).code == ExitCode::ok);
  CHECK(run("prep", from(R"({"masses":["1","inf","inf","1"],"variant":"molecular"})")).code == ExitCode::config_error);
  CHECK(run("prep", from(R"({"masses":["inf","1","2","1"],"variant":"atomic"})")).code == ExitCode::config_error);
  CHECK(run("prep", from(R"({"masses":["1","x","1","1"]})")).code == ExitCode::config_error);
  CHECK(run("prep", from(R"({"masses":["inf","inf","1","1"],"variant":"molecular","gauge":["1","1","1","1","1","1"]})"))
            .code == ExitCode::config_error);
  const auto r = run("prep", from(R"({"masses":["inf","inf","inf","1"],"variant":"three-center"})"));
  REQUIRE(r.code == ExitCode::ok);
  const auto j = json::parse(r.out);
  CHECK(j["dynamical"] == json({"r14", "r24", "r34"}));
}

TEST_CASE("verify: schema, determinism, exit code") {
  RunConfig c;
  c.seed = 5;
  const auto a = run("verify", c, {"geometry", "spectrum"});
  const auto b = run("verify", c, {"geometry", "spectrum"});
  CHECK(a.code == ExitCode::ok);
  CHECK(a.out == b.out);
  const auto j = json::parse(a.out);
  CHECK(j["version"] == 1);
  std::set<std::string> statuses{"pass", "fail", "reported-discrepancy"};
  std::string prev;
  for (const auto& ch : j["checks"]) {
    CHECK(ch.contains("check_id"));
    CHECK(ch["details"].is_object());
    CHECK(statuses.count(ch["status"].get<std::string>()));
    CHECK(prev <= ch["check_id"].get<std::string>());
    prev = ch["check_id"];
  }
  c.seed = 6;
  CHECK(run("verify", c, {"geometry"}).out != a.out);
  CHECK(run("verify", c, {"nonsense"}).code == ExitCode::config_error);
}

TEST_CASE("spectrum: equal masses N = 1 gives six rows at 8") {
  RunConfig c;
  c.N = 1;
  c.format = "csv";
  const auto r = run("spectrum", c);
  REQUIRE(r.code == ExitCode::ok);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n1,n2,n3,n4,n5,n6,energy_numerator,energy_denominator,multiplicity");
  int eights = 0, rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    eights += line.find(",8,1,6") != std::string::npos;
  }
  CHECK(rows == 7);
  CHECK(eights == 6);
  c.N = 5;
  CHECK(run("spectrum", c).code == ExitCode::config_error);
}

TEST_CASE("spectrum: three-center ground row and P-representation") {
  auto c = from(R"({"masses":["inf","inf","inf","1"],"variant":"three-center","N":0})");
  const auto r = run("spectrum", c);
  REQUIRE(r.code == ExitCode::ok);
  const auto j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["k1"] == 0);
  CHECK(j["rows"][0]["k3"] == 0);
  CHECK(j["rows"][0]["energy"].get<double>() == doctest::Approx(9));
  CHECK(j["ground_energy"] == "9/1");

  RunConfig p;
  p.p_representation = true;
  p.N = 10;
  const auto jp = json::parse(run("spectrum", p).out);
  REQUIRE(jp["rows"].size() == 11);
  CHECK(jp["rows"][0]["energy"] == "9/1");
  CHECK(jp["rows"][10]["energy"] == "49/1");
}

TEST_CASE("springs: forward, inverse, negative root, no convergence") {
  const auto f = json::parse(run("springs", RunConfig{}).out);
  for (const auto& v : f["nu"]) CHECK(v == "1/1");

  auto inv = from(R"({"masses":["1","2","3","4"],"nu":["1","2","3","2","1","3"],"direction":"inverse"})");
  const auto ji = json::parse(run("springs", inv).out);
  CHECK(ji["verdict"] == "ok");
  CHECK(ji["residual"].get<double>() < 1e-10);

  auto neg = from(R"({"nu":["1","1","1","1","1","-7/8"],"direction":"inverse"})");
  CHECK(json::parse(run("springs", neg).out)["verdict"] == "NegativeRoot");

  auto bad = from(R"({"nu":["1","1","1","1","1","-50"],"direction":"inverse"})");
  const auto rb = run("springs", bad);
  CHECK(rb.code == ExitCode::no_convergence);
  CHECK(json::parse(rb.out)["last_iterate"].size() == 6);

  auto missing = from(R"({"direction":"inverse"})");
  CHECK(run("springs", missing).code == ExitCode::config_error);
}

TEST_CASE("geometry and bo commands") {
  const auto g = json::parse(run("geometry", RunConfig{}).out);
  CHECK(g["v4_squared"] == "1/72");
  CHECK(g["domain"] == "interior");
  auto c = from(R"({"point":["1","4","1","1","2","5"]})");
  CHECK(json::parse(run("geometry", c).out)["domain"] == "boundary");

  const auto b = run("bo", RunConfig{});
  CHECK(b.code == ExitCode::ok);
  const auto jb = json::parse(b.out);
  CHECK(jb["leading"].get<double>() == doctest::Approx(6).epsilon(0.01));
}

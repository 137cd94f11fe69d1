#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bcf/cli.hpp"
#include "bcf/error.hpp"

using namespace bcf;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("expand tribonacci") {
  auto r = invoke(split("expand --alpha alg:1,-1,-1,-1@1,2 --beta ratfunc:1,1/1,0 --terms 32"));
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["a"].size() == 32);
  for (const auto& d : j["a"]) CHECK(d == "1");
  for (const auto& d : j["b"]) CHECK(d == "1");
  CHECK(j["preperiod"] == 0);
  CHECK(j["period"] == 1);
  CHECK(j["terminated"] == false);
  REQUIRE(j["convergents"].size() == 32);
  CHECK(j["convergents"][2]["A"] == "4");
  CHECK(j["convergents"][2]["alpha"] == "2/1");
  CHECK(j["convergents"][5]["A"] == "24");
  CHECK(j["convergents"][31]["alpha_dec"].get<std::string>().rfind("1.839286755214", 0) == 0);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"a", "b", "convergents", "period", "preperiod", "terminal", "terminated"});
}

TEST_CASE("expand moore and rationals") {
  auto m = json::parse(invoke(split("expand --alpha alg:1,-1,0,-1@1,2 --beta ratfunc:1/1,0 --terms 16")).out);
  for (const auto& d : m["b"]) CHECK(d == "0");
  CHECK(m["period"] == 1);
  auto r = invoke(split("expand --alpha rat:7/5 --beta rat:3/2"));
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["terminated"] == true);
  CHECK(j["period"].is_null());
  CHECK(j["b"].size() == j["a"].size() + 1);
  CHECK(j["terminal"].is_string());
}

TEST_CASE("eval and validate examples") {
  auto e = invoke(split("eval --a 1,1,1 --b 1,1,1"));
  REQUIRE(e.code == 0);
  auto j = json::parse(e.out);
  CHECK(j["n"] == 2);
  CHECK(j["A"] == "4");
  CHECK(j["B"] == "3");
  CHECK(j["C"] == "2");
  CHECK(j["alpha"] == "2/1");
  CHECK(j["beta"] == "3/2");
  CHECK(j["det"] == "1");

  auto d = json::parse(invoke(split("eval --a 1,1,1,1,1,1,1,1,1,1 --b 1,1,1,1,1,1,1,1,1,1 --diagnostics")).out);
  CHECK(d["diagnostics"]["certified"] == true);

  auto v = invoke(split("validate --a 3,2,2,1 --b 0,2,0,1"));
  CHECK(v.code == 0);
  auto vj = json::parse(v.out);
  CHECK(vj["valid"] == false);
  REQUIRE(vj["violations"].size() == 1);
  CHECK(vj["violations"][0]["index"] == 1);
  CHECK(vj["violations"][0]["rule"] == "equal_then_b_zero");

  auto p = json::parse(invoke(split("validate --a 2,2,3 --b 2,0,0 --preperiod 1")).out);
  CHECK(p["valid"] == true);
}

TEST_CASE("render") {
  auto r = invoke(split("render --a 1,1,1 --b 1,1,1"));
  REQUIRE(r.code == 0);
  std::ifstream in(std::string(BCF_GOLDEN_DIR) + "/ones_depth2.txt");
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(r.out == golden.str());
  auto l = invoke(split("render --a 1,1,1 --b 1,1,1 --depth 1 --format latex"));
  CHECK(l.out.rfind("\\alpha^{(1)} = 1 + \\frac{1}{1}\n", 0) == 0);
}

TEST_CASE("recover") {
  auto r = invoke(split("recover --a 2,2,3 --b 2,0,0 --preperiod 1"));
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["poly"] == json::array({"1", "-1", "-2", "-1"}));
  CHECK(j["quartic_coefficient"] == "0");
  CHECK(j["round_trip"] == true);
  CHECK(j["alpha"] == "alg:1,-1,-2,-1@2,3");
  CHECK(j["alpha_dec"].get<std::string>().rfind("2.147899035", 0) == 0);

  auto m = json::parse(invoke(split("recover --alpha alg:1,-1,0,-1@1,2 --beta ratfunc:1/1,0")).out);
  CHECK(m["poly_text"] == "x^3 - x^2 - 1");
  CHECK(m["matches_input"] == true);

  auto none = invoke(split("recover --alpha rat:7/5 --beta rat:3/2"));
  CHECK(none.code == 3);
  CHECK(invoke(split("recover --a 1,2 --b 2,0")).code == 2);
  CHECK(invoke(split("recover --a 1 --b 1 --alpha rat:1 --beta rat:1")).code == 2);
}

TEST_CASE("scan output") {
  auto r = invoke(split("scan --c2 -1 --c1 -1 --c0 -1 --beta ratfunc:1,1/1,0 --beta ratfunc:1/1,0 --jobs 2"));
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<json> records;
  for (std::string line; std::getline(lines, line);) records.push_back(json::parse(line));
  REQUIRE(records.size() == 2);
  std::vector<std::string> keys;
  for (auto it = records[0].begin(); it != records[0].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"beta_expr", "digits_preview", "interval", "min_poly", "period", "preperiod",
                                         "status"});
  CHECK(records[0]["status"] == "periodic");
  CHECK(records[0]["period"] == 1);
  CHECK(records[0]["preperiod"] == 0);
  CHECK(invoke(split("scan --c2 -1 --c1 -1 --c0 -1 --beta alg:1,0,-2@1,2")).code == 2);
}

TEST_CASE("approximate mode is labeled") {
  auto r = invoke(split("expand --approx --alpha dec:1.8392867552141611325518525646532866 --beta ratfunc:1,1/1,0 "
                        "--terms 30"));
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["heuristic"] == true);
  REQUIRE(j["a"].size() >= 10);
  for (const auto& d : j["a"]) CHECK(d == "1");
  CHECK(j["period"].is_null());

  auto exact = json::parse(invoke(split("expand --approx --alpha alg:1,-1,-1,-1@1,2 --beta ratfunc:1,1/1,0 --terms 40")).out);
  CHECK(exact["heuristic"] == true);
  CHECK(exact["a"].size() == 40);
  CHECK(exact["precision_exhausted"] == false);

  auto coarse = json::parse(invoke(split("expand --approx --alpha dec:1.8393 --beta dec:1.5437 --terms 40")).out);
  CHECK(coarse["precision_exhausted"] == true);
  CHECK(coarse["a"].size() < 40);

  auto mixed = invoke(split("expand --approx --alpha dec:1.5 --beta alg:1,0,-2@1,2 --terms 5"));
  CHECK(mixed.code == 0);
  CHECK(invoke(split("expand --approx --alpha dec:-1.5 --beta rat:1")).code == 2);
}

TEST_CASE("deterministic output") {
  auto args = split("expand --alpha alg:1,-1,-2,-1@2,3 --beta ratfunc:2,1/1,0 --terms 20");
  auto first = invoke(args), second = invoke(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("exit codes") {
  struct Case {
    const char* args;
    int code;
  };
  const Case cases[] = {
      {"expand --alpha rat:7/4 --beta rat:3/2", 0},
      {"", 2},
      {"frobnicate", 2},
      {"expand --alpha rat:7/4", 2},
      {"expand --alpha rat:7/x --beta rat:1", 2},
      {"expand --alpha alg:1,0,-4@0,3 --beta rat:1", 2},
      {"expand --alpha alg:1,-1,-1,-1@2,3 --beta rat:1", 2},
      {"expand --alpha alg:1,0,0,0,-2@1,2 --beta rat:1", 2},
      {"expand --alpha rat:0 --beta rat:1", 2},
      {"expand --alpha ratfunc:1/1 --beta rat:1", 2},
      {"expand --alpha alg:1,-1,-1,-1@1,2 --beta alg:1,-1,0,-1@1,2", 2},
      {"expand --alpha rat:1 --beta rat:1 --terms 0", 2},
      {"expand --alpha rat:1 --beta rat:1 --format yaml", 2},
      {"expand --alpha rat:1 --beta rat:1 --guard 3", 2},
      {"expand --alpha dec:1.5 --beta rat:1", 2},
      {"eval --a 1,2 --b 1", 2},
      {"eval --a 1,-2 --b 1,1", 2},
      {"eval --a 1,0,1 --b 1,1,1 --n 2", 3},
      {"eval --a 1,1 --b 1,1 --n 5", 2},
      {"render --a 1,1 --b 1,1 --depth 4", 2},
      {"validate --a 1,1 --b 1,1 --preperiod 2", 2},
      {"scan --c2 1,0 --c1 0 --c0 -2", 2},
      {"recover --a 1 --b 1", 0},
      {"eval --a 1,1,1 --b 1,1,1 --help", 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args);
    auto r = invoke(split(c.args));
    CHECK(r.code == c.code);
    if (c.code == 2) CHECK(r.err.find("error") != std::string::npos);
    if (c.code != 0) CHECK(r.out.empty());
  }
}

TEST_CASE("usage errors name the token and the grammar") {
  auto r = invoke(split("expand --alpha alg:1,-1,q@1,2 --beta rat:1"));
  CHECK(r.code == 2);
  CHECK(r.err.find("alg:1,-1,q@1,2") != std::string::npos);
  CHECK(r.err.find("                   ^") != std::string::npos);
  CHECK(r.err.find("alg:<c_d>,...,<c_0>@<lo>,<hi>") != std::string::npos);
  auto d = invoke(split("eval --a 1,x --b 1,1"));
  CHECK(d.err.find("--a 1,x") != std::string::npos);
  CHECK(d.err.find("<d_0>,<d_1>") != std::string::npos);
  auto u = invoke(split("expand --alpha rat:1 --beta rat:1 --bogus"));
  CHECK(u.err.find("--bogus") != std::string::npos);
  CHECK(u.err.find("usage: bcf expand") != std::string::npos);
}

TEST_CASE("job specs round-trip through text") {
  const char* lines[] = {
      "expand --alpha alg:1,-1,-1,-1@1,2 --beta ratfunc:1,1/1,0 --terms 32",
      "expand --beta rat:3/2 --alpha dec:1.25 --approx --guard 4 --digits 30 --format text",
      "eval --a 1,1,1 --b 1,1,1 --n 1 --diagnostics",
      "render --a 1,2 --b 0,1 --depth 1 --format latex",
      "validate --a 2,2,3 --b 2,0,0 --preperiod 1",
      "recover --alpha rat:1 --beta rat:2 --terms 10 --digits 5",
      "scan --c2 -1,1 --c1 0 --c0 -2,-1 --beta ratfunc:1/1,0 --beta ratfunc:1,0/1 --jobs 3 --preview 4",
  };
  for (const char* line : lines) {
    CAPTURE(line);
    JobSpec spec = parse_job(split(line));
    CHECK(parse_job(to_args(spec)) == spec);
    CHECK(parse_job(split(to_text(spec))) == spec);
    CHECK(to_text(parse_job(split(to_text(spec)))) == to_text(spec));
  }
  JobSpec s = parse_job(split("scan --c2 0 --c1 0 --c0 -2 --beta ratfunc:1/1,0 --beta ratfunc:1,0/1"));
  CHECK(s.command == Command::Scan);
  CHECK(s.inputs.count("beta") == 2);
  CHECK_THROWS_AS(parse_job(split("expand --alpha rat:x --beta rat:1")), Error);
  CHECK_THROWS_AS(parse_job(split("nope")), Error);
}

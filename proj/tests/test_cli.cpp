#include "doctest.h"
#include "vkt/cli/commands.hpp"
#include "vkt/cli/jobspec.hpp"
#include "vkt/error.hpp"

using namespace vkt;
using namespace vkt::cli;

namespace {

JobSpec job(const std::string& group, std::vector<std::int64_t> levels, const std::string& command,
            std::vector<std::string> args = {}) {
  JobSpec s;
  s.group.name = group;
  s.twist.levels = std::move(levels);
  s.command = command;
  s.args = std::move(args);
  return s;
}

std::pair<int, int> parse_error_at(const std::string& text) {
  try {
    parse_jobspec(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("job file parsing") {
  const auto s = parse_jobspec(
      "# comment line\n"
      "group = \"SU(2) x U(1)\"   # trailing\n"
      "twist = { levels = [5, 4],\n"
      "          shift = \"dual_coxeter\",\n"
      "          epsilon = [0, 1] }\n"
      "command = \"fuse\"\n"
      "args = [\"1,0\", \"1,0\"]\n"
      "format = \"tsv\"\n");
  CHECK(s.group.name == "SU(2) x U(1)");
  CHECK(s.twist.levels == std::vector<std::int64_t>{5, 4});
  CHECK(s.twist.dual_coxeter_shift);
  CHECK(s.twist.epsilon == std::vector<std::int64_t>{0, 1});
  CHECK(s.command == "fuse");
  CHECK(s.args == std::vector<std::string>{"1,0", "1,0"});
  CHECK(s.format == "tsv");

  const auto m = parse_jobspec(
      "cartan = [[2, -1],\n"
      "          [-1, 2]]\n"
      "torus_rank = 1\n"
      "torus_form = [[2]]\n"
      "twist = { b = [[6, -3, 0], [-3, 6, 0], [0, 0, 2]] }\n");
  CHECK(m.group.cartan == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(m.group.torus_rank == 1);
  CHECK(m.twist.b == IntMatrix{{6, -3, 0}, {-3, 6, 0}, {0, 0, 2}});
  CHECK(parse_jobspec("twist = {}\n").twist == TwistSpec{});
}

TEST_CASE("job file round trip") {
  std::vector<JobSpec> specs;
  specs.push_back(job("SU(3)", {4}, "table"));
  JobSpec a = job("SU(2) x U(1)", {4, 3}, "fuse", {"1,0", "0,1"});
  a.twist.epsilon = {0, 1};
  a.twist.dual_coxeter_shift = true;
  a.format = "tsv";
  specs.push_back(a);
  JobSpec b;
  b.group.cartan = IntMatrix{{2, -2}, {-1, 2}};
  b.group.torus_rank = 2;
  b.group.torus_form = IntMatrix{{2, 1}, {1, 2}};
  b.twist.torus = IntMatrix{{2, 1}, {1, 3}};
  b.twist.levels = {5};
  b.command = "info";
  specs.push_back(b);
  JobSpec c;
  c.group.name = "U(1)^2";
  c.twist.b = IntMatrix{{2, 1}, {1, 3}};
  c.args = {"with \"quotes\" # and hash"};
  specs.push_back(c);
  for (const auto& s : specs) {
    const std::string text = emit_jobspec(s);
    CAPTURE(text);
    CHECK(parse_jobspec(text) == s);
    CHECK(emit_jobspec(parse_jobspec(text)) == text);
  }
}

TEST_CASE("parse errors carry line and column") {
  CHECK(parse_error_at("group = \"SU(2)\"\nlevel = 3\n") == std::pair{2, 1});
  CHECK(parse_error_at("group = SU(2)\n") == std::pair{1, 9});
  CHECK(parse_error_at("group = \"SU(2)\"\ntwist = { levels = [1, x] }\n").first == 2);
  CHECK(parse_error_at("twist = { levels = [3], shift = \"half\" }\n") == std::pair{1, 33});
  CHECK(parse_error_at("twist = { level = [3] }\n") == std::pair{1, 11});
  CHECK(parse_error_at("torus_rank = \"two\"\n") == std::pair{1, 14});
  CHECK(parse_error_at("group = \"A\" \"B\"\n") == std::pair{1, 13});
  CHECK(parse_error_at("group = \"A\"\ngroup = \"B\"\n") == std::pair{2, 1});
  CHECK(parse_error_at("cartan = [[2, -1],\n  [-1]]\n").first == 1);
  CHECK(parse_error_at("group \"A\"\n") == std::pair{1, 7});
}

TEST_CASE("info") {
  const auto r = run_job(job("SU(2)", {5}, "info")).report["result"];
  CHECK(r["rank"] == 1);
  CHECK(r["weyl_order"] == 2);
  CHECK(r["F_order"] == 10);
  CHECK(r["degree_parity"] == "odd");
  CHECK(r["dual_coxeter"] == nlohmann::json::array({2}));

  const auto u = run_job(job("U(1)", {3}, "info")).report["result"];
  CHECK(u["rank"] == 1);
  CHECK(u["weyl_order"] == 1);
  CHECK(u["F_order"] == 3);

  const auto s = run_job(job("SU(3)", {4}, "info")).report["result"];
  CHECK(s["rank"] == 2);
  CHECK(s["weyl_order"] == 6);
  CHECK(s["degree_parity"] == "even");
}

TEST_CASE("report envelope") {
  const auto rep = run_job(job("SU(2)", {5}, "basis")).report;
  CHECK(rep["tool"] == "vkt");
  CHECK(rep["version"] == kVersion);
  CHECK(parse_jobspec(rep["spec"].get<std::string>()) == job("SU(2)", {5}, "basis"));
  CHECK(rep["conventions"]["rho_tilde"] == nlohmann::json::array({1}));
  CHECK(rep["conventions"]["rho_tilde_rule"].is_string());
  CHECK(rep["conventions"]["lambda_epsilon"] == nlohmann::json::array({"0"}));
  CHECK(rep["twist"]["b"] == nlohmann::json::parse("[[10]]"));
  CHECK(rep["result"]["size"] == 4);
  CHECK(rep["result"]["basis"][3]["lambda"] == nlohmann::json::array({3}));
  CHECK(rep["result"]["basis"][3]["dimension"] == 4);
}

TEST_CASE("classes are exact rationals") {
  const auto r = run_job(job("SU(2)", {3}, "classes")).report["result"];
  CHECK(r["count"] == 2);
  CHECK(r["classes"][0]["point"] == nlohmann::json::array({"1/6"}));
  CHECK(r["classes"][1]["point"] == nlohmann::json::array({"1/3"}));
  CHECK(!r["classes"][0].contains("numeric_shadow"));
  RunOptions opt;
  opt.numeric_shadow = true;
  const auto s = run_job(job("SU(2)", {3}, "classes"), opt).report["result"];
  // χ_1(1/6) = 2 cos(π/3) = 1.
  CHECK(s["classes"][0]["numeric_shadow"]["characters"][1][0].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("fuse and table") {
  const auto f = run_job(job("SU(2)", {5}, "fuse", {"2", "2"})).report["result"];
  CHECK(f["coefficients"] == nlohmann::json::parse(R"({"0": 1, "2": 1})"));
  const auto g = run_job(job("SU(3)", {4}, "fuse", {"1,0", "0,1"})).report["result"];
  CHECK(g["coefficients"].size() == 1);  // level 1: simple currents
  const auto t = run_job(job("SU(2)", {4}, "table")).report["result"];
  CHECK(t["size"] == 3);
  CHECK(t["entries"].size() == 10);
  JobSpec np = job("U(1)", {3}, "fuse", {"1", "1"});
  CHECK_THROWS_AS(run_job(np), Error);
  np.command = "table";
  CHECK_THROWS_AS(run_job(np), Error);
  CHECK_THROWS_AS(run_job(job("SU(2)", {5}, "fuse", {"2"})), Error);
  CHECK_THROWS_AS(run_job(job("SU(2)", {5}, "fuse", {"2", "x"})), Error);
  CHECK_THROWS_AS(run_job(job("SU(2)", {0}, "info")), Error);
}

TEST_CASE("verify and example") {
  const auto v = run_job(job("SU(2)", {5}, "verify"));
  CHECK(v.exit_code == 0);
  CHECK(v.report["result"]["all_pass"] == true);
  const auto e = run_job(job("", {}, "example", {"su2", "5"})).report["result"];
  CHECK(e["rank"] == 4);
  CHECK(e["relation"] == "rho_4");
  CHECK(e["quotient"] == "R(SU(2))/(rho_4)");
  CHECK(e["orbit_basis_size"] == 4);
  const auto s3 = run_job(job("", {}, "example", {"s3", "6"})).report["result"];
  CHECK(s3["K0"] == "0");
  CHECK(s3["K1"] == "Z/6");
  JobSpec u = job("", {}, "example", {"u1", "3"});
  u.twist.epsilon = {1};
  const auto u1 = run_job(u).report["result"];
  CHECK(u1["relation"] == "-L^3 - 1");
  CHECK(u1["rank"] == 3);
  CHECK_THROWS_AS(run_job(job("", {}, "example", {"s4", "3"})), Error);
  CHECK_THROWS_AS(run_job(job("SU(2)", {5}, "frobnicate")), Error);
}

TEST_CASE("error reports") {
  const auto e = error_report(ParseError(3, 7, "bad"));
  CHECK(e["error"]["kind"] == "ParseError");
  CHECK(e["error"]["line"] == 3);
  CHECK(e["error"]["column"] == 7);
  try {
    run_job(job("U(1)", {3}, "table"));
  } catch (const std::exception& ex) {
    CHECK(error_report(ex)["error"]["kind"] == "NotPrimitive");
  }
}

TEST_CASE("tsv") {
  const auto j = nlohmann::json::parse(R"({"a": {"b": [1, "x"]}, "c": [], "d": null})");
  CHECK(to_tsv(j) == "a.b.0\t1\na.b.1\tx\nc\t[]\nd\tnull\n");
}

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "json.hpp"

#include "cydisk/cli.hpp"

using cydisk::Command;
using cydisk::Format;
using cydisk::RunConfig;
using cydisk::RunResult;

namespace {

RunConfig config(Command cmd, std::vector<int> degrees, int max_degree,
                 Format fmt = Format::plain) {
  RunConfig cfg;
  cfg.command = cmd;
  cfg.degrees = std::move(degrees);
  cfg.max_degree = max_degree;
  cfg.format = fmt;
  return cfg;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("invariants command, plain") {
  const RunResult res = run_command(config(Command::invariants, {5}, 9));
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "a=(5)  n=5  l=1  p_max=1"));
  CHECK(contains(res.output, "d=1: 30\n"));
  CHECK(contains(res.output, "d=3: 4600\n"));
  CHECK(contains(res.output, "d=5: 5441256\n"));
  CHECK(contains(res.output, "d=7: 47823842250/7\n"));
  CHECK(contains(res.output, "d=9: 28973369597500/3\n"));

  const RunResult res3 = run_command(config(Command::invariants, {3}, 1));
  CHECK(res3.exit_code == 0);
  CHECK(contains(res3.output, "d=1: 6\n"));
  CHECK_FALSE(contains(res3.output, "d=3"));
}

TEST_CASE("invariants command, json schema") {
  const RunResult res = run_command(config(Command::invariants, {3, 5}, 3, Format::json));
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["geometry"]["degrees"] == nlohmann::json({3, 5}));
  CHECK(j["geometry"]["n"] == 8);
  CHECK(j["geometry"]["l"] == 2);
  CHECK(j["geometry"]["p_max"] == 2);
  CHECK(j["max_degree"] == 3);
  REQUIRE(j["invariants"].size() == 2);
  CHECK(j["invariants"][0]["d"] == 1);
  CHECK(j["invariants"][0]["value"] == "90");
  CHECK(j["invariants"][1]["d"] == 3);
  CHECK(j["invariants"][1]["value"] == "1396950");
}

TEST_CASE("invariants command, csv") {
  const RunResult res = run_command(config(Command::invariants, {5}, 3, Format::csv));
  CHECK(res.exit_code == 0);
  CHECK(res.output == "d,value\n1,30\n3,4600\n");
}

TEST_CASE("series command") {
  const RunResult plain = run_command(config(Command::series, {5}, 3));
  CHECK(plain.exit_code == 0);
  CHECK(contains(plain.output, "I_0(q): 1, 120, 113400, 168168000\n"));
  CHECK(contains(plain.output, "I_1(q): 1, 770, 1435650, 3225308000\n"));
  CHECK(contains(plain.output, "J(q): 0, 770, 717825, 3225308000/3\n"));
  CHECK(contains(plain.output, "tau(u): 0, 30, 0, 50050/3\n"));
  CHECK(contains(plain.output, "q(Q): 0, 1, -770, 171525\n"));

  const RunResult json = run_command(config(Command::series, {5}, 3, Format::json));
  const auto j = nlohmann::json::parse(json.output);
  REQUIRE(j["series"].size() == 5);
  CHECK(j["series"][0]["name"] == "I_0");
  CHECK(j["series"][0]["variable"] == "q");
  CHECK(j["series"][0]["coefficients"][1] == "120");
  CHECK(j["series"][3]["name"] == "tau");
  CHECK(j["series"][3]["variable"] == "u");
  CHECK(j["series"][4]["name"] == "q(Q)");

  const RunResult csv = run_command(config(Command::series, {3}, 1, Format::csv));
  CHECK(contains(csv.output, "series,index,value\n"));
  CHECK(contains(csv.output, "I_0,1,6\n"));
  CHECK(contains(csv.output, "tau,1,6\n"));
}

TEST_CASE("verify command passes and reports") {
  RunConfig cfg = config(Command::verify, {5}, 5);
  cfg.weight_samples = 2;
  cfg.seed = 0;
  const RunResult res = run_command(cfg);
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "trunc_u=5"));
  CHECK(contains(res.output, "seed=0"));
  CHECK(contains(res.output, "sample 0: lambda=("));
  CHECK(contains(res.output, "[PASS] residue p=0 sample=0\n"));
  CHECK(contains(res.output, "[PASS] theorem p=0 s=1 sample=1\n"));
  CHECK(contains(res.output, "identity checks passed\n"));
  CHECK_FALSE(contains(res.output, "[FAIL]"));
  // timings are diagnostics, not part of the deterministic report
  CHECK(contains(res.diagnostics, " ms\n"));
  CHECK_FALSE(contains(res.output, " ms"));

  cfg.format = Format::json;
  const RunResult jres = run_command(cfg);
  const auto j = nlohmann::json::parse(jres.output);
  CHECK(j["all_pass"] == true);
  CHECK(j["trunc_u"] == 5);
  CHECK(j["samples"].size() == 2);
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);

  cfg.format = Format::csv;
  const RunResult cres = run_command(cfg);
  CHECK(contains(cres.output, "identity,p,s,sample,pass,first_diff_u\n"));
  CHECK(contains(cres.output, "residue,0,,0,true,\n"));
}

TEST_CASE("verify needs at least two samples") {
  RunConfig cfg = config(Command::verify, {5}, 5);
  cfg.weight_samples = 1;
  const RunResult res = run_command(cfg);
  CHECK(res.exit_code == 2);
  CHECK(contains(res.diagnostics, "need >= 2 weight samples"));
}

TEST_CASE("invalid input exits with code 2 and a reason") {
  CHECK(run_command(config(Command::invariants, {4}, 9)).exit_code == 2);
  CHECK(contains(run_command(config(Command::invariants, {4}, 9)).diagnostics,
                 "degrees must be odd"));
  CHECK(contains(run_command(config(Command::invariants, {1}, 9)).diagnostics,
                 "n - l must be positive and even"));
  CHECK(contains(run_command(config(Command::invariants, {}, 9)).diagnostics,
                 "degrees must be non-empty"));
  CHECK(contains(run_command(config(Command::invariants, {5}, 8)).diagnostics,
                 "max degree must be a positive odd integer"));
  CHECK(run_command(config(Command::invariants, {5}, -3)).exit_code == 2);
}

TEST_CASE("identical configuration gives byte-identical output") {
  RunConfig cfg = config(Command::verify, {3}, 5, Format::json);
  cfg.weight_samples = 2;
  cfg.seed = 7;
  const RunResult a = run_command(cfg);
  const RunResult b = run_command(cfg);
  CHECK(a.output == b.output);
  CHECK(a.exit_code == b.exit_code);

  const RunResult inv_a = run_command(config(Command::invariants, {3, 3}, 5, Format::json));
  const RunResult inv_b = run_command(config(Command::invariants, {3, 3}, 5, Format::json));
  CHECK(inv_a.output == inv_b.output);
}

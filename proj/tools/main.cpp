#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cydisk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"one-point disk invariants of odd projective Calabi-Yau complete intersections"};
  app.require_subcommand(1);

  std::vector<int> degrees;
  int max_degree = 9;
  std::uint64_t seed = 0;
  int weight_samples = 3;
  std::string format = "plain";

  const auto add_common = [&](CLI::App* cmd, bool with_verify_opts) {
    cmd->add_option("--degrees", degrees, "odd degrees a_1 .. a_l of the complete intersection")
        ->required();
    cmd->add_option("--max-degree", max_degree, "largest odd degree reported (default 9)");
    cmd->add_option("--format", format, "output format (default plain)")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    if (with_verify_opts) {
      cmd->add_option("--seed", seed, "weight-sampling seed (default 0)");
      cmd->add_option("--weight-samples", weight_samples,
                      "number of torus-weight assignments (default 3)");
    }
  };

  CLI::App* inv = app.add_subcommand(
      "invariants", "disk invariants N_{1,d} from the closed nested-derivative formula");
  CLI::App* ver = app.add_subcommand(
      "verify", "cross-check the closed formula against the localization fixed-point sum");
  CLI::App* ser = app.add_subcommand(
      "series", "mirror-side building blocks: I_p, J, tau, and the inverse mirror map");
  add_common(inv, false);
  add_common(ver, true);
  add_common(ser, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  cydisk::RunConfig cfg;
  cfg.degrees = degrees;
  cfg.max_degree = max_degree;
  cfg.seed = seed;
  cfg.weight_samples = weight_samples;
  if (inv->parsed()) cfg.command = cydisk::Command::invariants;
  if (ver->parsed()) cfg.command = cydisk::Command::verify;
  if (ser->parsed()) cfg.command = cydisk::Command::series;
  if (format == "json") cfg.format = cydisk::Format::json;
  if (format == "csv") cfg.format = cydisk::Format::csv;

  const cydisk::RunResult res = cydisk::run_command(cfg);
  std::cout << res.output;
  std::cerr << res.diagnostics;
  return res.exit_code;
}

#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cydisk/disk.hpp"
#include "cydisk/geometry.hpp"
#include "cydisk/localization.hpp"
#include "cydisk/mirror.hpp"
#include "cydisk/rational.hpp"

namespace cydisk {

enum class Command { invariants, verify, series };
enum class Format { plain, json, csv };

struct RunConfig {
  Command command = Command::invariants;
  std::vector<int> degrees;
  int max_degree = 9;       // largest reported odd degree
  std::uint64_t seed = 0;   // weight-sampling seed (verify)
  int weight_samples = 3;   // number of weight assignments (verify)
  Format format = Format::plain;
};

// Outcome of one CLI run. `output` is the deterministic report for stdout:
// identical (config, seed) pairs produce byte-identical output. Timings and
// error messages go to `diagnostics` (stderr) so they never break that.
struct RunResult {
  int exit_code = 0;  // 0 success, 1 failed verification, 2 invalid input
  std::string output;
  std::string diagnostics;
};

namespace detail_cli {

using ojson = nlohmann::ordered_json;

inline std::string degrees_str(const Geometry& g) {
  std::string s = "(";
  for (size_t i = 0; i < g.degrees().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(g.degrees()[i]);
  }
  return s + ")";
}

inline ojson geometry_json(const Geometry& g) {
  return ojson{{"degrees", g.degrees()}, {"n", g.n()}, {"l", g.l()}, {"p_max", g.p_max()}};
}

inline std::string coeff_list(const QSeries& s) {
  std::string out;
  for (int d = 0; d <= s.trunc(); ++d) {
    if (d) out += ", ";
    out += fraction_string(s[d]);
  }
  return out;
}

inline std::string coeff_list(const HalfSeries& s) {
  std::string out;
  for (int d = 0; d <= s.trunc(); ++d) {
    if (d) out += ", ";
    out += fraction_string(s[d]);
  }
  return out;
}

inline RunResult invariants(const Geometry& g, const RunConfig& cfg) {
  // two guard orders beyond the report, so the top coefficient is not a
  // truncation artifact
  const DiskPotential dp = disk_potential_Q(g, cfg.max_degree + 2);
  std::map<int, Rational> inv;
  for (const auto& [d, v] : extract_invariants(dp))
    if (d <= cfg.max_degree) inv.emplace(d, v);

  RunResult res;
  std::ostringstream out;
  switch (cfg.format) {
    case Format::plain:
      out << "a=" << degrees_str(g) << "  n=" << g.n() << "  l=" << g.l()
          << "  p_max=" << g.p_max() << "  max_degree=" << cfg.max_degree << "\n";
      for (const auto& [d, v] : inv) out << "d=" << d << ": " << fraction_string(v) << "\n";
      break;
    case Format::json: {
      ojson j{{"geometry", geometry_json(g)}, {"max_degree", cfg.max_degree}};
      j["invariants"] = ojson::array();
      for (const auto& [d, v] : inv)
        j["invariants"].push_back(ojson{{"d", d}, {"value", fraction_string(v)}});
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "d,value\n";
      for (const auto& [d, v] : inv) out << d << ',' << fraction_string(v) << "\n";
      break;
  }
  res.output = out.str();
  return res;
}

inline RunResult series(const Geometry& g, const RunConfig& cfg) {
  const int t = cfg.max_degree;
  std::vector<std::pair<std::string, QSeries>> qside;
  for (int p = 0; p <= g.p_max(); ++p)
    qside.emplace_back("I_" + std::to_string(p), I_series(g, p, t));
  qside.emplace_back("J", J_series(g, t));
  const HalfSeries tau = tau_series(g, t);
  const QSeries qq = mirror_q_of_Q(g, t);

  RunResult res;
  std::ostringstream out;
  switch (cfg.format) {
    case Format::plain:
      out << "a=" << degrees_str(g) << "  n=" << g.n() << "  l=" << g.l()
          << "  p_max=" << g.p_max() << "  max_degree=" << cfg.max_degree << "\n";
      for (const auto& [name, s] : qside) out << name << "(q): " << coeff_list(s) << "\n";
      out << "tau(u): " << coeff_list(tau) << "\n";
      out << "q(Q): " << coeff_list(qq) << "\n";
      break;
    case Format::json: {
      ojson j{{"geometry", geometry_json(g)}, {"max_degree", cfg.max_degree}};
      j["series"] = ojson::array();
      const auto push = [&](const std::string& name, const std::string& var, auto&& s) {
        ojson e{{"name", name}, {"variable", var}};
        e["coefficients"] = ojson::array();
        for (int d = 0; d <= s.trunc(); ++d) e["coefficients"].push_back(fraction_string(s[d]));
        j["series"].push_back(std::move(e));
      };
      for (const auto& [name, s] : qside) push(name, "q", s);
      push("tau", "u", tau);
      push("q(Q)", "Q", qq);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      out << "series,index,value\n";
      const auto rows = [&](const std::string& name, auto&& s) {
        for (int d = 0; d <= s.trunc(); ++d)
          out << name << ',' << d << ',' << fraction_string(s[d]) << "\n";
      };
      for (const auto& [name, s] : qside) rows(name, s);
      rows("tau", tau);
      rows("q(Q)", qq);
      break;
    }
  }
  res.output = out.str();
  return res;
}

inline RunResult verify(const Geometry& g, const RunConfig& cfg) {
  if (cfg.weight_samples < 2) throw std::invalid_argument("need >= 2 weight samples");
  const std::vector<WeightAssignment> samples =
      sample_weights(g, cfg.weight_samples, cfg.seed, cfg.max_degree + 2);
  const VerifyReport rep = verify_identities(g, samples, cfg.max_degree);

  RunResult res;
  res.exit_code = rep.all_pass ? 0 : 1;

  std::ostringstream diag;
  for (const IdentityCheck& c : rep.checks) {
    diag << identity_name(c.kind);
    if (c.p >= 0) diag << " p=" << c.p;
    if (c.s >= 0) diag << " s=" << c.s;
    if (c.sample >= 0) diag << " sample=" << c.sample;
    diag << ": " << c.elapsed_ms << " ms\n";
  }
  diag << "total: " << rep.total_ms << " ms\n";
  res.diagnostics = diag.str();

  int failed = 0;
  for (const IdentityCheck& c : rep.checks) failed += c.pass ? 0 : 1;

  std::ostringstream out;
  switch (cfg.format) {
    case Format::plain: {
      out << "a=" << degrees_str(g) << "  n=" << g.n() << "  l=" << g.l()
          << "  p_max=" << g.p_max() << "  trunc_u=" << cfg.max_degree
          << "  seed=" << cfg.seed << "  samples=" << cfg.weight_samples << "\n";
      for (size_t j = 0; j < samples.size(); ++j) {
        out << "sample " << j << ": lambda=(";
        for (size_t k = 0; k < samples[j].lambdas().size(); ++k) {
          if (k) out << ',';
          out << fraction_string(samples[j].lambdas()[k]);
        }
        out << ")\n";
      }
      for (const IdentityCheck& c : rep.checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << identity_name(c.kind);
        if (c.p >= 0) out << " p=" << c.p;
        if (c.s >= 0) out << " s=" << c.s;
        if (c.sample >= 0) out << " sample=" << c.sample;
        if (!c.pass) out << " first_diff_u=" << c.first_diff_u;
        out << "\n";
      }
      if (rep.all_pass)
        out << "all " << rep.checks.size() << " identity checks passed\n";
      else
        out << failed << " of " << rep.checks.size() << " identity checks failed\n";
      break;
    }
    case Format::json: {
      ojson j{{"geometry", geometry_json(g)},
              {"trunc_u", cfg.max_degree},
              {"seed", cfg.seed},
              {"weight_samples", cfg.weight_samples}};
      j["samples"] = ojson::array();
      for (const WeightAssignment& w : samples) {
        ojson row = ojson::array();
        for (const Rational& lam : w.lambdas()) row.push_back(fraction_string(lam));
        j["samples"].push_back(std::move(row));
      }
      j["checks"] = ojson::array();
      for (const IdentityCheck& c : rep.checks) {
        ojson e{{"identity", identity_name(c.kind)}};
        if (c.p >= 0) e["p"] = c.p;
        if (c.s >= 0) e["s"] = c.s;
        if (c.sample >= 0) e["sample"] = c.sample;
        e["pass"] = c.pass;
        if (!c.pass) e["first_diff_u"] = c.first_diff_u;
        j["checks"].push_back(std::move(e));
      }
      j["all_pass"] = rep.all_pass;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      out << "identity,p,s,sample,pass,first_diff_u\n";
      for (const IdentityCheck& c : rep.checks) {
        out << identity_name(c.kind) << ',';
        if (c.p >= 0) out << c.p;
        out << ',';
        if (c.s >= 0) out << c.s;
        out << ',';
        if (c.sample >= 0) out << c.sample;
        out << ',' << (c.pass ? "true" : "false") << ',';
        if (!c.pass) out << c.first_diff_u;
        out << "\n";
      }
      break;
    }
  }
  res.output = out.str();
  return res;
}

}  // namespace detail_cli

// Runs one subcommand against a validated configuration. All invalid input
// is reported as exit code 2 with the reason in `diagnostics`.
inline RunResult run_command(const RunConfig& cfg) {
  try {
    const Geometry g(cfg.degrees);
    if (cfg.max_degree < 1 || cfg.max_degree % 2 == 0)
      throw std::invalid_argument("max degree must be a positive odd integer");
    switch (cfg.command) {
      case Command::invariants: return detail_cli::invariants(g, cfg);
      case Command::series: return detail_cli::series(g, cfg);
      case Command::verify: return detail_cli::verify(g, cfg);
    }
    throw std::invalid_argument("unknown command");
  } catch (const std::exception& e) {
    RunResult res;
    res.exit_code = 2;
    res.diagnostics = std::string("error: ") + e.what() + "\n";
    return res;
  }
}

}  // namespace cydisk

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "nnc/error.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Common {
  std::uint64_t seed = 1;
  std::string out_path;
  int grid_points = nnc::SweepGrid{}.points;
  int refine_iters = nnc::SweepGrid{}.refine_iterations;

  nnc::SweepGrid grid() const {
    nnc::SweepGrid g;
    g.points = grid_points;
    g.refine_iterations = refine_iters;
    return g;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "64-bit seed for every random draw")->capture_default_str();
  cmd->add_option("--out", c.out_path, "write CSV here instead of stdout");
  cmd->add_option("--grid-points", c.grid_points, "log-spaced scan points per 1-D search")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  cmd->add_option("--refine-iters", c.refine_iters, "golden-section steps after the scan")
      ->capture_default_str()
      ->check(CLI::Range(0, 500));
}

// Output is buffered so a failed run never leaves a partial file behind.
void emit(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw nnc::UsageError("cannot write " + c.out_path);
  f << text;
  if (!f.flush()) throw nnc::UsageError("write to " + c.out_path + " failed");
}

const char* kTwrcHelp =
    "Two-way relay channel on a line: sum rates versus relay position d.\n"
    "Gains g12=1, g13=d^(-gamma/2), g23=(1-d)^(-gamma/2), unit noise.\n"
    "NNC: min of the two per-user cut bounds with Gaussian quantisation\n"
    "noise sigma2, maximised over sigma2. AF: amplify-forward, maximised\n"
    "over the relay gain alpha. CF: compress-forward with Wyner-Ziv binning\n"
    "at its smallest feasible sigma2.";

const char* kIrcHelp =
    "Interference relay channel, sources 1,2, receivers 4,5, relay 3 with a\n"
    "common noiseless link of rate R0. Sum rate versus P (dB).\n"
    "NNC_T2: multi-message bound, each receiver decodes both messages.\n"
    "NNC_T3: superposition bound, interference treated as noise.\n"
    "CF and HF: compress-forward and hash-forward relaying.\n"
    "--gain-reading alternate trades the g13 and g23 defaults.";

const char* kGapHelp =
    "Gaussian constant-gap certificate. Per cut S:\n"
    "  outer = 1/2 log|I + (P/2)G(S)G(S)^T| + 1/2 min(|S|,|S^c|) log(2|S|)\n"
    "  inner = 1/2 log|I + (P/2)G(S)G(S)^T| - |S|/2\n"
    "  budget = |S|/2 + 1/2 min(|S|,|S^c|) log(2|S|)\n"
    "aggregate_budget is (N/4) log(2N), reported only. Exit 3 if a cut\n"
    "exceeds its budget.";

const char* kEvalHelp =
    "Evaluate one bound on a JSON network (see docs/config-format.md).\n"
    "thm1: multicast noisy network coding bound\n"
    "  I(X(S); Yhat(S^c),Y_d | X(S^c),Q) - I(Y(S); Yhat(S) | X^N,Yhat(S^c),Y_d,Q)\n"
    "thm2: same terms with d in S^c and in D(S), multi-message\n"
    "thm3: superposition bound, interference as noise, rows keyed by T\n"
    "cutset: I(X(S); Y(S^c) | X(S^c))\n"
    "cf_ext: pure compress-forward extension, feasibility per (T, d)\n"
    "noiseless, erasure, deterministic: closed-form cut values\n"
    "gauss_inner, gauss_outer: Gaussian cut values as in gap-check";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nncbound: noisy network coding bounds and experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "nncbound 0.1.0");

  Common common;

  nnc::cli::TwrcSweepOptions twrc;
  std::string schemes = "nnc,af,cf";
  auto* twrc_cmd = app.add_subcommand("twrc-sweep", kTwrcHelp);
  twrc_cmd->add_option("--gamma", twrc.path_loss, "path-loss exponent")->capture_default_str();
  twrc_cmd->add_option("--power", twrc.power, "per-node power P")->capture_default_str();
  twrc_cmd->add_option("--d-min", twrc.d_min, "first relay position")->capture_default_str();
  twrc_cmd->add_option("--d-max", twrc.d_max, "last relay position")->capture_default_str();
  twrc_cmd->add_option("--steps", twrc.steps, "number of rows")->capture_default_str();
  twrc_cmd->add_option("--schemes", schemes, "comma list drawn from nnc,af,cf")
      ->capture_default_str();
  add_common(twrc_cmd, common);

  nnc::cli::IrcSweepOptions irc;
  std::string reading = "primary";
  double relay_rate = irc.gains.relay_rate;
  double g[6] = {};
  auto* irc_cmd = app.add_subcommand("irc-sweep", kIrcHelp);
  const char* gain_names[6] = {"--g13", "--g23", "--g14", "--g24", "--g15", "--g25"};
  CLI::Option* gain_opts[6];
  for (int i = 0; i < 6; ++i) {
    gain_opts[i] = irc_cmd->add_option(gain_names[i], g[i], "channel gain");
  }
  irc_cmd->add_option("--relay-rate", relay_rate, "relay link rate R0 in bits")
      ->capture_default_str();
  irc_cmd->add_option("--p-db-min", irc.p_db_min, "lowest power, dB")->capture_default_str();
  irc_cmd->add_option("--p-db-max", irc.p_db_max, "highest power, dB")->capture_default_str();
  irc_cmd->add_option("--steps", irc.steps, "number of rows")->capture_default_str();
  irc_cmd->add_option("--gain-reading", reading, "default gain reading")
      ->check(CLI::IsMember({"primary", "alternate"}))
      ->capture_default_str();
  add_common(irc_cmd, common);

  nnc::cli::GapCheckOptions gap;
  auto* gap_cmd = app.add_subcommand("gap-check", kGapHelp);
  gap_cmd->add_option("--config", gap.config_path, "gaussian network JSON");
  gap_cmd->add_option("--nodes", gap.nodes, "nodes per random network")->capture_default_str();
  gap_cmd->add_option("--trials", gap.trials, "random networks")->capture_default_str();
  gap_cmd->add_option("--power", gap.power, "per-node power P")->capture_default_str();
  add_common(gap_cmd, common);

  nnc::cli::EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", kEvalHelp);
  eval_cmd->add_option("--bound", eval.bound, "bound name")
      ->required()
      ->check(CLI::IsMember(nnc::cli::eval_bound_names()));
  eval_cmd->add_option("--network", eval.network_path, "network JSON")->required();
  eval_cmd->add_option("--dist", eval.distribution_path,
                       "distribution JSON (default: uniform inputs, Yhat = Y)");
  add_common(eval_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    std::ostringstream out;
    int status = 0;
    if (*twrc_cmd) {
      twrc.nnc = twrc.af = twrc.cf = false;
      std::stringstream list(schemes);
      for (std::string s; std::getline(list, s, ',');) {
        if (s == "nnc") twrc.nnc = true;
        else if (s == "af") twrc.af = true;
        else if (s == "cf") twrc.cf = true;
        else throw nnc::UsageError("unknown scheme \"" + s + "\"");
      }
      twrc.grid = common.grid();
      nnc::cli::run_twrc_sweep(twrc, out, std::cerr);
    } else if (*irc_cmd) {
      irc.gains = nnc::IrcConfig::figure_gains(1.0, relay_rate, reading == "alternate");
      double* fields[6] = {&irc.gains.g13, &irc.gains.g23, &irc.gains.g14,
                           &irc.gains.g24, &irc.gains.g15, &irc.gains.g25};
      for (int i = 0; i < 6; ++i) {
        if (gain_opts[i]->count() > 0) *fields[i] = g[i];
      }
      irc.grid = common.grid();
      nnc::cli::run_irc_sweep(irc, out, std::cerr);
    } else if (*gap_cmd) {
      gap.seed = common.seed;
      status = nnc::cli::run_gap_check(gap, out);
    } else if (*eval_cmd) {
      nnc::cli::run_eval(eval, out);
    }
    emit(common, out.str());
    return status;
  } catch (const nnc::UsageError& e) {
    std::cerr << "nncbound: error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nnc::NumericalError& e) {
    std::cerr << "nncbound: numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "nncbound: error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

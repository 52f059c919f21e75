#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nnc/irc.hpp"
#include "nnc/scalar_search.hpp"
#include "nnc/twrc.hpp"

namespace nnc::cli {

struct TwrcSweepOptions {
  double path_loss = 3.0;
  double power = 10.0;
  double d_min = 0.05;
  double d_max = 0.5;
  int steps = 10;
  bool nnc = true;
  bool af = true;
  bool cf = true;
  SweepGrid grid;
};

/// Columns d,sum_NNC,sum_AF,sum_CF,sigma2_NNC,alpha_AF,sigma2_CF. Schemes
/// left out leave their cells empty.
void run_twrc_sweep(const TwrcSweepOptions& opt, std::ostream& out, std::ostream& log);

struct IrcSweepOptions {
  IrcConfig gains = IrcConfig::figure_gains(1.0, 1.0);
  double p_db_min = 0.0;
  double p_db_max = 30.0;
  int steps = 11;
  SweepGrid grid;
};

/// Columns P_dB, the four sum rates plus their best, and the optimising
/// sigma^2 of every scheme. Fallback evaluations are noted on `log`.
void run_irc_sweep(const IrcSweepOptions& opt, std::ostream& out, std::ostream& log);

struct GapCheckOptions {
  /// Gaussian network file; random networks when empty.
  std::string config_path;
  int nodes = 4;
  int trials = 10;
  double power = 10.0;
  std::uint64_t seed = 1;
};

/// Per-cut certificate rows plus a summary row. Returns the exit status:
/// 0 when every row is within budget, 3 otherwise.
int run_gap_check(const GapCheckOptions& opt, std::ostream& out);

struct EvalOptions {
  std::string bound;
  std::string network_path;
  /// Distribution file; uniform inputs with Yhat = Y when empty.
  std::string distribution_path;
};

void run_eval(const EvalOptions& opt, std::ostream& out);

/// Names accepted by run_eval.
const std::vector<std::string>& eval_bound_names();

}  // namespace nnc::cli

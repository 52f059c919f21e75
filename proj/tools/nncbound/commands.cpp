#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "config.hpp"
#include "csv.hpp"
#include "nnc/dm_bounds.hpp"
#include "nnc/error.hpp"
#include "nnc/gauss_bounds.hpp"
#include "nnc/rate_region.hpp"
#include "nnc/special_networks.hpp"

namespace nnc::cli {

namespace {

std::string fmt(double v) { return format_double(v); }

// Evenly spaced points with both ends hit exactly.
std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> pts;
  for (int i = 0; i < steps; ++i) {
    if (i == 0) {
      pts.push_back(lo);
    } else if (i == steps - 1) {
      pts.push_back(hi);
    } else {
      pts.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
  }
  return pts;
}

}  // namespace

void run_twrc_sweep(const TwrcSweepOptions& opt, std::ostream& out, std::ostream& log) {
  if (!(opt.d_min > 0.0 && opt.d_min <= opt.d_max && opt.d_max < 1.0)) {
    throw UsageError("relay position range must satisfy 0 < d-min <= d-max < 1");
  }
  if (opt.steps < 1) throw UsageError("steps must be at least 1");
  if (opt.steps == 1 && opt.d_min != opt.d_max) {
    throw UsageError("a single step needs d-min == d-max");
  }
  if (!(opt.power > 0.0) || !std::isfinite(opt.power)) throw UsageError("power must be positive");
  if (!(opt.path_loss > 0.0) || !std::isfinite(opt.path_loss)) {
    throw UsageError("path-loss exponent must be positive");
  }
  opt.grid.validate();

  CsvWriter csv(out);
  csv.row({"d", "sum_NNC", "sum_AF", "sum_CF", "sigma2_NNC", "alpha_AF", "sigma2_CF"});
  for (double d : linspace(opt.d_min, opt.d_max, opt.steps)) {
    TwrcConfig cfg{d, opt.path_loss, opt.power};
    std::vector<std::string> row(7);
    row[0] = fmt(d);
    if (opt.nnc) {
      const auto r = twrc_rates(cfg, TwrcScheme::kNoisyNetworkCoding, opt.grid);
      row[1] = fmt(r.sum);
      row[4] = fmt(r.parameter);
    }
    if (opt.af) {
      const auto r = twrc_rates(cfg, TwrcScheme::kAmplifyForward, opt.grid);
      row[2] = fmt(r.sum);
      row[5] = fmt(r.parameter);
    }
    if (opt.cf) {
      const auto r = twrc_rates(cfg, TwrcScheme::kCompressForward, opt.grid);
      row[3] = fmt(r.sum);
      row[6] = fmt(r.parameter);
    }
    if (cfg.gains().capped) log << "note: d=" << fmt(d) << " hit the gain cap\n";
    csv.row(row);
  }
}

void run_irc_sweep(const IrcSweepOptions& opt, std::ostream& out, std::ostream& log) {
  if (opt.steps < 2) throw UsageError("steps must be at least 2");
  if (!std::isfinite(opt.p_db_min) || !std::isfinite(opt.p_db_max) || opt.p_db_min > opt.p_db_max) {
    throw UsageError("power range must satisfy p-db-min <= p-db-max");
  }
  opt.gains.validate();
  opt.grid.validate();

  struct Column {
    IrcScheme scheme;
    const char* name;
  };
  const Column columns[] = {{IrcScheme::kNncDecodeAll, "NNC_T2"},
                            {IrcScheme::kNncTreatNoise, "NNC_T3"},
                            {IrcScheme::kCompressForward, "CF"},
                            {IrcScheme::kHashForward, "HF"}};

  CsvWriter csv(out);
  csv.row({"P_dB", "sum_NNC_T2", "sum_NNC_T3", "sum_NNC_best", "sum_CF", "sum_HF",
           "sigma2_NNC_T2", "sigma2_NNC_T3", "sigma2_CF", "sigma2_HF"});
  for (double db : linspace(opt.p_db_min, opt.p_db_max, opt.steps)) {
    IrcConfig cfg = opt.gains;
    cfg.power = std::pow(10.0, db / 10.0);
    IrcRates r[4];
    for (int i = 0; i < 4; ++i) {
      r[i] = irc_rates(cfg, columns[i].scheme, opt.grid);
      if (r[i].flagged) {
        log << "note: P_dB=" << fmt(db) << " " << columns[i].name
            << " has no feasible sigma2, evaluated at the boundary limit\n";
      }
    }
    csv.row({fmt(db), fmt(r[0].sum), fmt(r[1].sum), fmt(std::max(r[0].sum, r[1].sum)),
             fmt(r[2].sum), fmt(r[3].sum), fmt(r[0].sigma2), fmt(r[1].sigma2), fmt(r[2].sigma2),
             fmt(r[3].sigma2)});
  }
}

int run_gap_check(const GapCheckOptions& opt, std::ostream& out) {
  std::vector<GaussianNetwork> nets;
  std::vector<NodeSet> dests;
  if (!opt.config_path.empty()) {
    NetworkConfig cfg = load_network(opt.config_path);
    if (cfg.kind != NetworkKind::kGaussian) {
      throw UsageError("gap-check needs a gaussian network, got " + to_string(cfg.kind));
    }
    NodeSet d = cfg.all_destinations();
    dests.push_back(d.empty() ? NodeSet::full(cfg.n_nodes) : d);
    nets.push_back(std::get<GaussianNetwork>(cfg.network));
  } else {
    if (opt.nodes < 2 || opt.nodes > kMaxNodes) throw UsageError("nodes must lie in [2:16]");
    if (opt.trials < 1) throw UsageError("trials must be at least 1");
    if (!(opt.power > 0.0) || !std::isfinite(opt.power)) throw UsageError("power must be positive");
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const int n = opt.nodes;
    const NodeSet all = NodeSet::full(n);
    for (int t = 0; t < opt.trials; ++t) {
      Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (j != k) g(j, k) = normal(rng);
        }
      }
      nets.emplace_back(g, opt.power, std::vector<NodeSet>(static_cast<std::size_t>(n), all));
      dests.push_back(all);
    }
  }

  CsvWriter csv(out);
  csv.row({"trial", "cut_mask", "cut", "outer", "inner_raw", "gap", "budget", "aggregate_budget",
           "ok"});
  double max_gap = -std::numeric_limits<double>::infinity();
  double max_budget = -std::numeric_limits<double>::infinity();
  bool all_ok = true;
  for (std::size_t t = 0; t < nets.size(); ++t) {
    const double aggregate = aggregate_gap_budget(nets[t].n_nodes());
    for (const GapRow& row : gap_certificate(nets[t], dests[t])) {
      max_gap = std::max(max_gap, row.gap);
      max_budget = std::max(max_budget, row.budget);
      all_ok = all_ok && row.ok;
      csv.row({std::to_string(t + 1), std::to_string(row.cut.mask()), row.cut.to_string(),
               fmt(row.outer), fmt(row.inner_raw), fmt(row.gap), fmt(row.budget), fmt(aggregate),
               row.ok ? "1" : "0"});
    }
  }
  csv.row({"summary", "", "", "", "", fmt(max_gap), fmt(max_budget), "", all_ok ? "1" : "0"});
  return all_ok ? 0 : 3;
}

const std::vector<std::string>& eval_bound_names() {
  static const std::vector<std::string> names = {
      "thm1",    "thm2",         "thm3",        "cutset",     "cf_ext",
      "noiseless", "erasure", "deterministic", "gauss_inner", "gauss_outer"};
  return names;
}

namespace {

void require_kind(const std::string& bound, const NetworkConfig& cfg,
                  std::initializer_list<NetworkKind> allowed) {
  for (NetworkKind k : allowed) {
    if (cfg.kind == k) return;
  }
  throw UsageError("bound " + bound + " does not apply to a " + to_string(cfg.kind) + " network");
}

DistributionConfig load_or_default(const EvalOptions& opt, const DmNetwork& net) {
  if (opt.distribution_path.empty()) {
    DistributionConfig d;
    d.coding = CodingDistribution::uniform_identity(net);
    return d;
  }
  return load_distribution(opt.distribution_path, net);
}

CutsetReport report_from_region(const std::string& name, const RateRegion& region) {
  CutsetReport r;
  r.bound_name = name;
  r.n_nodes = region.n_nodes();
  for (const auto& [set, value] : region.constraints()) r.add_value(set, 0, value);
  return r;
}

// Multicast when every source shares one destination set.
DestinationRule cut_rule(const NetworkConfig& cfg) {
  std::optional<NodeSet> common;
  for (NodeSet d : cfg.destinations) {
    if (d.empty()) continue;
    if (common && *common != d) return DestinationRule::per_cut(cfg.destinations);
    common = d;
  }
  return DestinationRule::multicast(common.value_or(NodeSet::full(cfg.n_nodes)));
}

void write_report(const CutsetReport& report, const NodeSet sources, std::ostream& out) {
  CsvWriter csv(out);
  csv.row({"kind", "cut_mask", "cut", "destination", "constrained_set", "raw", "clamped",
           "positive_term", "penalty_term"});
  double min_clamped = std::numeric_limits<double>::infinity();
  for (const CutsetEntry& e : report.entries) {
    min_clamped = std::min(min_clamped, e.clamped);
    csv.row({report.bound_name, std::to_string(e.cut.mask()), e.cut.to_string(),
             e.destination == 0 ? "" : std::to_string(e.destination),
             e.constrained_set().to_string(), fmt(e.raw), fmt(e.clamped), fmt(e.positive_term),
             fmt(e.penalty_term)});
  }
  csv.row({"min_clamped", "", "", "", "", "", fmt(min_clamped), "", ""});

  const RateRegion region = region_from_report(report);
  std::vector<double> weights(static_cast<std::size_t>(report.n_nodes), 0.0);
  for (int k : sources.members()) weights[static_cast<std::size_t>(k - 1)] = 1.0;
  const WeightedSumResult best = max_weighted_sum(region, weights, sources);
  csv.row({"sum_rate", std::to_string(sources.mask()), sources.to_string(), "", "", "",
           fmt(best.unbounded ? std::numeric_limits<double>::infinity() : best.value), "", ""});
}

void write_cf_extension(const CfExtensionResult& res, std::ostream& out) {
  CsvWriter csv(out);
  csv.row({"kind", "cut_mask", "cut", "destination", "constrained_set", "raw", "clamped",
           "positive_term", "penalty_term"});
  for (const CfExtensionConstraint& c : res.constraints) {
    const double slack = c.rhs - c.lhs;
    csv.row({"cf_ext", std::to_string(c.relays.mask()), c.relays.to_string(),
             std::to_string(c.destination), c.relays.to_string(), fmt(slack),
             fmt(std::max(slack, 0.0)), fmt(c.rhs), fmt(c.lhs)});
  }
  csv.row({"feasible", "", "", "", "", "", res.feasible ? "1" : "0", "", ""});
  csv.row({"R_star", "", "", "", "", "", fmt(res.rate), "", ""});
}

}  // namespace

void run_eval(const EvalOptions& opt, std::ostream& out) {
  const auto& names = eval_bound_names();
  if (std::find(names.begin(), names.end(), opt.bound) == names.end()) {
    throw UsageError("unknown bound \"" + opt.bound + "\"");
  }
  const NetworkConfig cfg = load_network(opt.network_path);
  const std::string& b = opt.bound;
  const NodeSet sources = cfg.sources();
  NodeSet dests = cfg.all_destinations();
  if (dests.empty()) dests = NodeSet::full(cfg.n_nodes);

  const auto dm_kinds = {NetworkKind::kDm, NetworkKind::kNoiseless, NetworkKind::kDeterministic};
  if (b == "thm1" || b == "thm2" || b == "thm3" || b == "cutset" || b == "cf_ext") {
    require_kind(b, cfg, dm_kinds);
    const DmNetwork net = cfg.as_dm();
    const DistributionConfig dist = load_or_default(opt, net);
    if (b == "thm1") {
      write_report(nnc_multicast_bound(net, dist.coding, dests), sources, out);
    } else if (b == "thm2") {
      write_report(nnc_theorem2_bound(net, dist.coding), sources, out);
    } else if (b == "thm3") {
      write_report(nnc_theorem3_bound(net, dist.coding), sources, out);
    } else if (b == "cutset") {
      const auto laws = dist.input_laws.empty()
                            ? std::vector<std::vector<double>>{dist.coding.input_law(net)}
                            : dist.input_laws;
      write_report(cutset_outer_bound(net, laws, cut_rule(cfg)), sources, out);
    } else {
      write_cf_extension(cf_extension_bound(net, dist.coding, dests), out);
    }
  } else if (b == "noiseless") {
    require_kind(b, cfg, {NetworkKind::kNoiseless});
    write_report(report_from_region("noiseless",
                                    noiseless_region(std::get<NoiselessNetwork>(cfg.network), dests)),
                 sources, out);
  } else if (b == "erasure") {
    require_kind(b, cfg, {NetworkKind::kErasure});
    write_report(
        report_from_region("erasure", erasure_region(std::get<ErasureNetwork>(cfg.network), dests)),
        sources, out);
  } else if (b == "deterministic") {
    require_kind(b, cfg, {NetworkKind::kDeterministic});
    const auto& det = std::get<DeterministicNetwork>(cfg.network);
    const DmNetwork net = cfg.as_dm();
    const DistributionConfig dist = load_or_default(opt, net);
    write_report(report_from_region("deterministic",
                                    deterministic_region(det, dist.coding.time_sharing,
                                                         dist.coding.inputs, dests)),
                 sources, out);
  } else {
    require_kind(b, cfg, {NetworkKind::kGaussian});
    const auto& net = std::get<GaussianNetwork>(cfg.network);
    CutsetReport r;
    r.bound_name = b;
    r.n_nodes = cfg.n_nodes;
    for (const Cutset& c : enumerate_cutsets(cfg.n_nodes, DestinationRule::multicast(dests))) {
      r.add_value(c.nodes, 0, b == "gauss_inner" ? gauss_nnc_inner(net, c.nodes)
                                                  : gauss_cutset_outer(net, c.nodes));
    }
    write_report(r, sources, out);
  }
}

}  // namespace nnc::cli

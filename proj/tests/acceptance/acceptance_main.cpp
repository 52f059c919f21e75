// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failures (capped at 1).
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "nnc/dm_bounds.hpp"
#include "nnc/gauss_bounds.hpp"
#include "nnc/irc.hpp"
#include "nnc/rate_region.hpp"
#include "nnc/special_networks.hpp"
#include "nnc/twrc.hpp"
#include "oracles.hpp"

using nnc::NodeSet;
using nnc_test::Rng;

namespace {

// Tolerances and limits, one block per criterion.
constexpr int kGapNetworks = 100;
constexpr double kGapTol = 1e-12;
constexpr double kGapSeconds = 5;

constexpr int kNoiselessGraphs = 20;
constexpr double kNoiselessTol = 1e-10;
constexpr double kNoiselessSeconds = 30;

constexpr int kRelayChannels = 50;
constexpr double kRelayTol = 1e-10;
constexpr double kRelaySeconds = 60;

constexpr double kOrderTol = 1e-9;
constexpr double kTwrcMidTol = 1e-6;
constexpr double kGoldenTol = 1e-7;
constexpr double kFigureSeconds = 10;

constexpr int kInnerOuterNetworks = 50;
constexpr double kInnerOuterTol = 1e-9;
constexpr double kInnerOuterSeconds = 120;

constexpr int kCfNetworks = 50;
constexpr double kCfTol = 1e-9;
constexpr double kCfSeconds = 120;

constexpr int kGf2Networks = 30;
constexpr double kErasureTol = 1e-15;
constexpr double kClosedFormSeconds = 10;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.pass = false;
    o.detail += " over time limit";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3fs", secs);
  std::cout << (o.pass ? "PASS " : "FAIL ") << id << ' ' << name << " [" << buf << "] "
            << o.detail << std::endl;
  if (!o.pass) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Golden file as header -> column values.
std::map<std::string, std::vector<double>> read_golden(const std::string& name) {
  std::ifstream f(std::string(NNC_GOLDEN_DIR) + "/" + name);
  if (!f) throw std::runtime_error("missing golden file " + name);
  std::string line;
  std::getline(f, line);
  std::vector<std::string> header;
  std::stringstream hs(line);
  for (std::string h; std::getline(hs, h, ',');) header.push_back(h);
  std::map<std::string, std::vector<double>> cols;
  while (std::getline(f, line)) {
    std::stringstream ls(line);
    std::size_t i = 0;
    for (std::string c; std::getline(ls, c, ','); ++i) cols[header.at(i)].push_back(std::stod(c));
  }
  return cols;
}

Outcome gap_identity() {
  Rng rng(20240601);
  const std::array<double, 3> powers{0.1, 1.0, 10.0};
  std::normal_distribution<double> gauss;
  double worst = 0;
  int cuts = 0;
  for (int t = 0; t < kGapNetworks; ++t) {
    const int n = 2 + t % 5;
    const double p = powers[static_cast<std::size_t>(t / 5 % 3)];
    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = i == j ? 0.0 : gauss(rng);
    const nnc::GaussianNetwork net(g, p, std::vector<NodeSet>(static_cast<std::size_t>(n),
                                                               NodeSet::full(n)));
    const NodeSet all = NodeSet::full(n);
    for (std::uint32_t m = 1; m < all.mask(); ++m) {
      const NodeSet s(static_cast<std::uint16_t>(m));
      const double gap = nnc::gauss_cutset_outer(net, s) - nnc::gauss_nnc_inner(net, s);
      const int k = s.size();
      const double want = k / 2.0 + std::min(k, n - k) / 2.0 * std::log2(2.0 * k);
      worst = std::max(worst, std::abs(gap - want));
      ++cuts;
    }
  }
  return {worst <= kGapTol, std::to_string(cuts) + " cuts, max |gap - budget| = " + num(worst)};
}

Outcome noiseless_collapse() {
  Rng rng(7);
  double worst = 0;
  int cuts = 0;
  for (int t = 0; t < kNoiselessGraphs; ++t) {
    const int n = nnc_test::pick(rng, 2, 5);
    const auto g = nnc_test::random_unit_digraph(rng, n, 0.4, 6);
    const NodeSet d = NodeSet::single(n);
    std::vector<NodeSet> dests(static_cast<std::size_t>(n));
    dests[0] = d;
    const auto net = g.to_dm_network(dests);
    const auto dist = nnc::CodingDistribution::uniform_identity(net);
    const auto thm1 = nnc::nnc_multicast_bound(net, dist, d);
    const auto cut = nnc::cutset_outer_bound(net, dist.input_law(net), nnc::DestinationRule::multicast(d));
    const auto region = nnc::noiseless_region(g, d);
    for (const auto& e : thm1.entries) {
      worst = std::max(worst, std::abs(e.raw - *region.bound(e.cut)));
      ++cuts;
    }
    for (const auto& e : cut.entries) worst = std::max(worst, std::abs(e.raw - g.cut_capacity(e.cut)));
  }
  // Line network 1 -> 2 -> 3 -> 4, single source.
  const nnc::NoiselessNetwork line(4, {{1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}});
  const auto lnet = line.to_dm_network({NodeSet::single(4), {}, {}, {}});
  const auto lb = nnc::nnc_multicast_bound(lnet, nnc::CodingDistribution::uniform_identity(lnet),
                                           NodeSet::single(4));
  const auto lregion = nnc::region_from_report(lb);
  const std::vector<double> w{1, 0, 0, 0};
  const double capacity = nnc::max_weighted_sum(lregion, w, NodeSet::single(1)).value;
  const bool ok = worst <= kNoiselessTol && capacity == 1.0;
  return {ok, std::to_string(cuts) + " cut/destination pairs, max err " + num(worst) +
                  ", line capacity " + num(capacity)};
}

Outcome relay_equivalence() {
  Rng rng(11);
  double worst = 0;
  for (int t = 0; t < kRelayChannels; ++t) {
    const auto net = nnc_test::random_dm(rng, {2, 2, 1}, {1, 2, 2},
                                         {NodeSet::single(3), {}, {}});
    const auto dist = nnc_test::random_coding(rng, net, nnc_test::pick(rng, 1, 2));
    const double emz = nnc::relay_cf_emz(net, dist);
    const auto thm1 = nnc::nnc_multicast_bound(net, dist, NodeSet::single(3));
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : thm1.entries) {
      if (e.cut == NodeSet::single(1) || e.cut == NodeSet::of({1, 2})) best = std::min(best, e.raw);
    }
    worst = std::max(worst, std::abs(emz - best));
  }
  return {worst <= kRelayTol, "max |emz - thm1| = " + num(worst)};
}

Outcome twrc_figure() {
  const nnc::SweepGrid grid;
  const auto golden = read_golden("twrc_sweep.csv");
  bool ok = golden.at("d").size() == 10;
  double margin_af = INFINITY, margin_cf = INFINITY, mid = 0, drift = 0;
  for (int i = 0; i < 10; ++i) {
    nnc::TwrcConfig cfg;
    cfg.distance = 0.05 + 0.05 * i;
    cfg.path_loss = 3.0;
    cfg.power = 10.0;
    const double nncs = nnc::twrc_rates(cfg, nnc::TwrcScheme::kNoisyNetworkCoding, grid).sum;
    const double af = nnc::twrc_rates(cfg, nnc::TwrcScheme::kAmplifyForward, grid).sum;
    const double cf = nnc::twrc_rates(cfg, nnc::TwrcScheme::kCompressForward, grid).sum;
    margin_af = std::min(margin_af, nncs - af);
    margin_cf = std::min(margin_cf, nncs - cf);
    if (i == 9) mid = std::abs(nncs - cf);
    if (ok) {
      const auto idx = static_cast<std::size_t>(i);
      drift = std::max({drift, std::abs(nncs - golden.at("sum_NNC")[idx]),
                        std::abs(af - golden.at("sum_AF")[idx]),
                        std::abs(cf - golden.at("sum_CF")[idx])});
    }
  }
  ok = ok && margin_af >= -kOrderTol && margin_cf >= -kOrderTol && mid <= kTwrcMidTol &&
       drift <= kGoldenTol;
  return {ok, "min NNC-AF " + num(margin_af) + ", min NNC-CF " + num(margin_cf) +
                  ", |NNC-CF| at d=0.5 " + num(mid) + ", golden drift " + num(drift)};
}

Outcome irc_figure() {
  const nnc::SweepGrid grid;
  const auto golden = read_golden("irc_sweep.csv");
  bool ok = golden.at("P_dB").size() == 11;
  double margin_cf = INFINITY, margin_hf = INFINITY, high = 0, drift = 0;
  for (int i = 0; i <= 10; ++i) {
    const auto cfg = nnc::IrcConfig::figure_gains(std::pow(10.0, 3.0 * i / 10.0), 1.0);
    const double t2 = nnc::irc_rates(cfg, nnc::IrcScheme::kNncDecodeAll, grid).sum;
    const double t3 = nnc::irc_rates(cfg, nnc::IrcScheme::kNncTreatNoise, grid).sum;
    const double cf = nnc::irc_rates(cfg, nnc::IrcScheme::kCompressForward, grid).sum;
    const double hf = nnc::irc_rates(cfg, nnc::IrcScheme::kHashForward, grid).sum;
    margin_cf = std::min(margin_cf, t3 - cf);
    margin_hf = std::min(margin_hf, t3 - hf);
    if (i == 10) high = t2 - t3;
    if (ok) {
      const auto idx = static_cast<std::size_t>(i);
      drift = std::max({drift, std::abs(t2 - golden.at("sum_NNC_T2")[idx]),
                        std::abs(t3 - golden.at("sum_NNC_T3")[idx]),
                        std::abs(cf - golden.at("sum_CF")[idx]),
                        std::abs(hf - golden.at("sum_HF")[idx])});
    }
  }
  ok = ok && margin_cf >= -kOrderTol && margin_hf >= -kOrderTol && high >= -kOrderTol &&
       drift <= kGoldenTol;
  return {ok, "min T3-CF " + num(margin_cf) + ", min T3-HF " + num(margin_hf) +
                  ", T2-T3 at 30 dB " + num(high) + ", golden drift " + num(drift)};
}

std::vector<int> twos(int n) { return std::vector<int>(static_cast<std::size_t>(n), 2); }

Outcome inner_below_outer() {
  Rng rng(23);
  double worst = -INFINITY;
  for (int t = 0; t < kInnerOuterNetworks; ++t) {
    const int n = nnc_test::pick(rng, 2, 4);
    NodeSet d;
    while (d.empty()) {
      for (int k = 1; k <= n; ++k)
        if (nnc_test::uniform(rng) < 0.5) d = d.with(k);
    }
    const auto net = nnc_test::random_dm(
        rng, twos(n), twos(n), std::vector<NodeSet>(static_cast<std::size_t>(n), d));
    const auto dist = nnc_test::random_coding(rng, net, nnc_test::pick(rng, 1, 2));
    const auto thm1 = nnc::nnc_multicast_bound(net, dist, d);
    const auto cut = nnc::cutset_outer_bound(net, dist.input_law(net), nnc::DestinationRule::multicast(d));
    std::map<NodeSet, double> outer;
    for (const auto& e : cut.entries) outer[e.cut] = e.raw;
    for (const auto& e : thm1.entries) worst = std::max(worst, e.raw - outer.at(e.cut));
  }
  return {worst <= kInnerOuterTol, "max (inner - outer) = " + num(worst)};
}

Outcome cf_dominance() {
  Rng rng(31);
  int feasible = 0;
  double worst = -INFINITY;
  for (int t = 0; t < kCfNetworks; ++t) {
    const int n = nnc_test::pick(rng, 2, 4);
    NodeSet d;
    while (d.empty()) {
      for (int k = 2; k <= n; ++k)
        if (nnc_test::uniform(rng) < 0.5) d = d.with(k);
    }
    std::vector<NodeSet> dests(static_cast<std::size_t>(n));
    dests[0] = d;
    const auto net = nnc_test::random_dm(rng, twos(n), twos(n), dests);
    auto dist = nnc_test::random_coding(rng, net);
    // Relays compress half the time; destinations keep a constant Yhat
    // otherwise they pay for describing their own output.
    for (int k = 1; k <= n; ++k) {
      const auto idx = static_cast<std::size_t>(k - 1);
      if (d.contains(k) || k == 1 || nnc_test::uniform(rng) < 0.5) {
        dist.yhat_sizes[idx] = 1;
        dist.compression[idx][0].assign(static_cast<std::size_t>(2 * 2), 1.0);
      }
    }
    const auto cf = nnc::cf_extension_bound(net, dist, d);
    if (!cf.feasible) continue;
    ++feasible;
    const auto thm1 = nnc::nnc_multicast_bound(net, dist, d);
    double single = INFINITY;
    for (const auto& e : thm1.entries)
      if (e.cut.contains(1)) single = std::min(single, e.raw);
    worst = std::max(worst, cf.rate - single);
  }
  const bool ok = feasible > 0 && worst <= kCfTol;
  return {ok, std::to_string(feasible) + "/" + std::to_string(kCfNetworks) +
                  " feasible, max (R* - thm1) = " + num(worst)};
}

Outcome closed_forms() {
  Rng rng(41);
  int cuts = 0, mismatches = 0;
  for (int t = 0; t < kGf2Networks; ++t) {
    const int n = nnc_test::pick(rng, 2, 4);
    std::vector<std::vector<int>> g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (j != k) g[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = nnc_test::uniform(rng) < 0.5;
    const auto det = nnc::DeterministicNetwork::gf2_linear(g);
    const NodeSet d = NodeSet::full(n);
    const auto net = det.to_dm_network(std::vector<NodeSet>(static_cast<std::size_t>(n), d));
    const auto thm1 = nnc::nnc_multicast_bound(net, nnc::CodingDistribution::uniform_identity(net), d);
    for (const auto& e : thm1.entries) {
      std::vector<std::vector<int>> sub;
      for (int j : e.cut.members()) {
        std::vector<int> row;
        for (int k : e.cut.complement(n).members())
          row.push_back(g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)]);
        sub.push_back(row);
      }
      if (e.raw != static_cast<double>(nnc_test::gf2_rank(sub))) ++mismatches;
      ++cuts;
    }
  }
  // Single erasure link at 0.5, and a broadcast pair erased with 0.5 and 0.2.
  const auto one = nnc::ErasureNetwork::independent({2, 1}, {{0, 0.5}, {0, 0}});
  const double v1 = *nnc::erasure_region(one, NodeSet::single(2)).bound(NodeSet::single(1));
  const auto two = nnc::ErasureNetwork::independent({2, 1, 1}, {{0, 0.5, 0.2}, {0, 0, 0}, {0, 0, 0}});
  const double v2 = *nnc::erasure_region(two, NodeSet::of({2, 3})).bound(NodeSet::single(1));
  const bool ok = mismatches == 0 && std::abs(v1 - 0.5) <= kErasureTol &&
                  std::abs(v2 - 0.9) <= kErasureTol;
  return {ok, std::to_string(cuts) + " GF(2) cuts, " + std::to_string(mismatches) +
                  " rank mismatches, erasure " + num(v1) + " and " + num(v2)};
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(NNC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), got);
  status = pclose(p);
  return out;
}

Outcome determinism() {
  const std::string ex = NNC_DOCS_EXAMPLES;
  const std::vector<std::string> commands{
      "twrc-sweep --seed 5",
      "irc-sweep --steps 11 --seed 5",
      "gap-check --trials 20 --nodes 5 --seed 5",
      "eval --bound thm1 --network " + ex + "/relay_dm.json --dist " + ex + "/relay_dist.json",
      "eval --bound cutset --network " + ex + "/line4_noiseless.json",
  };
  std::string detail;
  bool ok = true;
  for (const auto& c : commands) {
    int s1 = 0, s2 = 0;
    const auto a = run_cli(c, s1);
    const auto b = run_cli(c, s2);
    const bool same = s1 == 0 && s2 == 0 && !a.empty() && a == b;
    ok = ok && same;
    detail += c.substr(0, c.find(' ')) + (same ? " ok; " : " DIFFERS; ");
  }
  return {ok, detail};
}

}  // namespace

int main() {
  report(1, "gap identity", kGapSeconds, gap_identity);
  report(2, "noiseless collapse", kNoiselessSeconds, noiseless_collapse);
  report(3, "relay channel equivalence", kRelaySeconds, relay_equivalence);
  report(4, "two-way relay figure", kFigureSeconds, twrc_figure);
  report(5, "interference relay figure", kFigureSeconds, irc_figure);
  report(6, "inner below outer", kInnerOuterSeconds, inner_below_outer);
  report(7, "compress-forward dominance", kCfSeconds, cf_dominance);
  report(8, "deterministic and erasure closed forms", kClosedFormSeconds, closed_forms);
  report(9, "cli determinism", 0, determinism);
  return failures == 0 ? 0 : 1;
}

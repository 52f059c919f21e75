#include "nnc/dm_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nnc/error.hpp"
#include "nnc/info_measures.hpp"

namespace nnc {

namespace {

VarList minus(const VarList& a, const VarList& c) {
  VarList out;
  for (int v : a) {
    if (std::find(c.begin(), c.end(), v) == c.end()) out.push_back(v);
  }
  return out;
}

// I(A;B|C) after removing conditioned variables from A and B; the value is
// unchanged by that removal.
double mi_given(const JointDistribution& joint, const VarList& a, const VarList& b,
                VarList c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return conditional_mi(joint, minus(a, c), minus(b, c), c);
}

void check_plain(const CodingDistribution& dist) {
  if (dist.mode() != CodingMode::kPlain) {
    throw UsageError("this bound takes a plain (non-superposition) coding distribution");
  }
}

CutsetReport cut_bound(const DmNetwork& net, const CodingDistribution& dist,
                       const DestinationRule& rule, std::string name) {
  check_plain(dist);
  const int n = net.n_nodes();
  const auto nj = assemble_joint(net, dist, CodingMode::kPlain);
  const auto& j = nj.joint;
  const auto& v = nj.vars;
  const NodeSet all = NodeSet::full(n);

  CutsetReport report{std::move(name), n, {}};
  for (const auto& cut : enumerate_cutsets(n, rule)) {
    const NodeSet s = cut.nodes;
    const NodeSet sc = all - s;
    for (int d : cut.destinations.members()) {
      const VarList yd{v.y(d)};
      const double positive =
          conditional_mi(j, v.xs(s), join({v.yhats(sc), yd}), join({v.xs(sc), {v.q()}}));
      const double penalty = conditional_mi(
          j, v.ys(s), v.yhats(s), join({v.xs(all), v.yhats(sc), yd, {v.q()}}));
      report.add(s, d, std::nullopt, positive, penalty);
    }
  }
  return report;
}

}  // namespace

CutsetReport nnc_multicast_bound(const DmNetwork& net, const CodingDistribution& dist,
                                 NodeSet destinations) {
  if (destinations.empty()) throw UsageError("multicast bound needs a nonempty destination set");
  if (!destinations.is_subset_of(NodeSet::full(net.n_nodes()))) {
    throw UsageError("destination set names a node outside the network");
  }
  return cut_bound(net, dist, DestinationRule::multicast(destinations), "thm1");
}

CutsetReport nnc_theorem2_bound(const DmNetwork& net, const CodingDistribution& dist) {
  return cut_bound(net, dist, DestinationRule::per_cut(net.destinations()), "thm2");
}

CutsetReport nnc_theorem3_bound(const DmNetwork& net, const CodingDistribution& dist) {
  if (dist.mode() != CodingMode::kSuperposition) {
    throw UsageError("the interference-as-noise bound needs superposition layers U_k");
  }
  const int n = net.n_nodes();
  const auto nj = assemble_joint(net, dist, CodingMode::kSuperposition);
  const auto& j = nj.joint;
  const auto& v = nj.vars;
  const NodeSet all = NodeSet::full(n);

  CutsetReport report{"thm3", n, {}};
  for (const auto& cut : enumerate_cutsets(n, DestinationRule::per_cut(net.destinations()))) {
    const NodeSet s = cut.nodes;
    const NodeSet sc = all - s;
    for (int d : cut.destinations.members()) {
      NodeSet senders_to_d = NodeSet::single(d);
      for (int k = 1; k <= n; ++k) {
        if (net.destinations()[k - 1].contains(d)) senders_to_d = senders_to_d.with(k);
      }
      const VarList yd{v.y(d)};
      const double penalty =
          conditional_mi(j, v.ys(s), v.yhats(s),
                         join({v.xs(senders_to_d), v.us(all), v.yhats(sc), yd, {v.q()}}));
      const NodeSet required = s & senders_to_d;
      const NodeSet optional = senders_to_d.without(d) - required;
      for_each_subset(optional, [&](NodeSet extra) {
        const NodeSet t = required | extra;
        const NodeSet tc = senders_to_d - t;
        const double positive =
            conditional_mi(j, join({v.xs(t), v.us(s)}), join({v.yhats(sc), yd}),
                           join({v.xs(tc), v.us(sc), {v.q()}}));
        report.add(s, d, t, positive, penalty);
      });
    }
  }
  return report;
}

double relay_cf_emz(const DmNetwork& net, const CodingDistribution& dist) {
  check_plain(dist);
  if (net.n_nodes() != 3) throw UsageError("relay channel evaluation needs exactly 3 nodes");
  if (net.x_sizes()[2] != 1 || net.y_sizes()[0] != 1) {
    throw UsageError("relay channel: the destination (node 3) must not transmit and the "
                     "source (node 1) must not receive");
  }
  const auto nj = assemble_joint(net, dist, CodingMode::kPlain);
  const auto& j = nj.joint;
  const int x1 = j.find("X1"), x2 = j.find("X2");
  const int y2 = j.find("Y2"), y3 = j.find("Y3");
  const int yhat2 = j.find("Yhat2"), q = j.find("Q");

  const double through_relay = conditional_mi(j, {x1}, {yhat2, y3}, {x2, q});
  const double to_destination = conditional_mi(j, {x1, x2}, {y3}, {q});
  const double description = conditional_mi(j, {y2}, {yhat2}, {x1, x2, y3, q});
  return std::min(through_relay, to_destination - description);
}

namespace {

// Joint of (X^N, Y^N) under an input law and the channel.
JointDistribution input_output_joint(const DmNetwork& net, const std::vector<double>& law) {
  if (law.size() != net.input_count()) {
    throw UsageError("input law has " + std::to_string(law.size()) + " entries, expected " +
                     std::to_string(net.input_count()));
  }
  double total = 0.0;
  for (double p : law) {
    if (!(p >= 0.0)) throw UsageError("input law has a negative entry");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) throw UsageError("input law does not sum to 1");
  const int n = net.n_nodes();
  std::vector<std::string> labels;
  std::vector<int> cards;
  for (int k = 1; k <= n; ++k) {
    labels.push_back("X" + std::to_string(k));
    cards.push_back(net.x_sizes()[k - 1]);
  }
  for (int k = 1; k <= n; ++k) {
    labels.push_back("Y" + std::to_string(k));
    cards.push_back(net.y_sizes()[k - 1]);
  }
  std::vector<double> probs(net.input_count() * net.output_count());
  for (std::uint64_t x = 0; x < net.input_count(); ++x) {
    const auto row = net.channel_row(x);
    for (std::uint64_t y = 0; y < net.output_count(); ++y) {
      probs[x * net.output_count() + y] = law[x] * row[y];
    }
  }
  return JointDistribution(std::move(labels), std::move(cards), std::move(probs));
}

VarList node_vars(NodeSet s, int offset) {
  VarList out;
  for (int k : s.members()) out.push_back(offset + k - 1);
  return out;
}

}  // namespace

CutsetReport cutset_outer_bound(const DmNetwork& net, const std::vector<double>& input_law,
                                const DestinationRule& rule) {
  return cutset_outer_bound(net, std::vector<std::vector<double>>{input_law}, rule);
}

CutsetReport cutset_outer_bound(const DmNetwork& net,
                                const std::vector<std::vector<double>>& input_laws,
                                const DestinationRule& rule) {
  if (input_laws.empty()) throw UsageError("cutset bound needs at least one input law");
  const int n = net.n_nodes();
  const NodeSet all = NodeSet::full(n);
  const auto cuts = enumerate_cutsets(n, rule);
  std::vector<double> best(cuts.size(), -std::numeric_limits<double>::infinity());
  for (const auto& law : input_laws) {
    const JointDistribution j = input_output_joint(net, law);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      const NodeSet s = cuts[i].nodes;
      const NodeSet sc = all - s;
      const double value = conditional_mi(j, node_vars(s, 0), node_vars(sc, n), node_vars(sc, 0));
      best[i] = std::max(best[i], value);
    }
  }
  CutsetReport report{"cutset", n, {}};
  for (std::size_t i = 0; i < cuts.size(); ++i) report.add_value(cuts[i].nodes, 0, best[i]);
  return report;
}

CfExtensionResult cf_extension_bound(const DmNetwork& net, const CodingDistribution& dist,
                                     NodeSet destinations) {
  check_plain(dist);
  const int n = net.n_nodes();
  if (n < 2) throw UsageError("compress-forward extension needs at least one relay");
  const NodeSet all = NodeSet::full(n);
  const NodeSet relays = all.without(1);
  if (destinations.empty() || !destinations.is_subset_of(relays)) {
    throw UsageError("compress-forward extension destinations must lie in [2:N]");
  }
  const auto nj = assemble_joint(net, dist, CodingMode::kPlain);
  const auto& j = nj.joint;
  const auto& v = nj.vars;
  const VarList q{v.q()};
  const VarList x_relays = v.xs(relays);

  CfExtensionResult result;
  result.feasible = true;
  result.rate = std::numeric_limits<double>::infinity();
  for (int d : destinations.members()) {
    const VarList yd{v.y(d)};
    const VarList xd{v.x(d)};
    result.rate = std::min(
        result.rate, conditional_mi(j, {v.x(1)}, join({v.yhats(relays), yd}), join({x_relays, q})));
    for_each_subset(relays, [&](NodeSet t) {
      const NodeSet tc = relays - t;
      double lhs = mi_given(j, v.ys(t), v.yhats(t), join({x_relays, v.yhats(tc), yd, q}));
      for (int k : t.members()) {
        lhs += mi_given(j, x_relays, {v.yhat(k)}, {v.x(k), v.q()});
      }
      const double rhs = mi_given(j, v.xs(t), yd, join({v.xs(tc), xd, q}));
      result.constraints.push_back({t, d, lhs, rhs});
      if (lhs > rhs + 1e-12) result.feasible = false;
    });
  }
  return result;
}

}  // namespace nnc

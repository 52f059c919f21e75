#include "nnc/gauss_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "nnc/info_measures.hpp"

namespace nnc {

double gap_budget(int cut_size, int n_nodes) {
  const int rest = n_nodes - cut_size;
  return cut_size / 2.0 + std::min(cut_size, rest) / 2.0 * std::log2(2.0 * cut_size);
}

double aggregate_gap_budget(int n_nodes) { return n_nodes / 4.0 * std::log2(2.0 * n_nodes); }

double gauss_cutset_outer(const GaussianNetwork& net, NodeSet cut) {
  const int s = cut.size();
  const int sc = net.n_nodes() - s;
  return gauss_cut_rate(net, cut) + 0.5 * std::min(s, sc) * std::log2(2.0 * s);
}

double gauss_nnc_inner(const GaussianNetwork& net, NodeSet cut) {
  return gauss_cut_rate(net, cut) - cut.size() / 2.0;
}

std::vector<GapRow> gap_certificate(const GaussianNetwork& net, NodeSet destinations) {
  const int n = net.n_nodes();
  std::vector<GapRow> rows;
  for (const auto& cut : enumerate_cutsets(n, DestinationRule::multicast(destinations))) {
    GapRow row;
    row.cut = cut.nodes;
    row.outer = gauss_cutset_outer(net, cut.nodes);
    row.inner_raw = gauss_nnc_inner(net, cut.nodes);
    row.gap = row.outer - row.inner_raw;
    row.budget = gap_budget(cut.nodes.size(), n);
    row.ok = row.gap <= row.budget + 1e-9;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nnc

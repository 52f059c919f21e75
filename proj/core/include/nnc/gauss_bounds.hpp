#pragma once

#include <vector>

#include "nnc/networks.hpp"
#include "nnc/node_set.hpp"

namespace nnc {

/// Relaxed Gaussian cutset bound:
///   1/2 log2|I + (P/2) G(S)G(S)^T| + 1/2 min{|S|,|S^c|} log2(2|S|)
double gauss_cutset_outer(const GaussianNetwork& net, NodeSet cut);

/// Noisy network coding value with unit-variance Gaussian quantisation
/// noise: 1/2 log2|I + (P/2) G(S)G(S)^T| - |S|/2. Not clamped.
double gauss_nnc_inner(const GaussianNetwork& net, NodeSet cut);

/// |S|/2 + min{|S|,|S^c|}/2 log2(2|S|)
double gap_budget(int cut_size, int n_nodes);

/// (N/4) log2(2N), the network-wide figure the per-cut budgets are
/// usually summarised by. Reported only.
double aggregate_gap_budget(int n_nodes);

struct GapRow {
  NodeSet cut;
  double outer = 0.0;
  double inner_raw = 0.0;
  /// outer - inner_raw
  double gap = 0.0;
  double budget = 0.0;
  bool ok = true;
};

/// One row per cut with S^c ∩ D nonempty; ok is gap <= budget + 1e-9.
std::vector<GapRow> gap_certificate(const GaussianNetwork& net, NodeSet destinations);

}  // namespace nnc

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nnc/coding_distribution.hpp"
#include "nnc/networks.hpp"
#include "nnc/rate_region.hpp"

namespace nnc {

struct NoiselessEdge {
  int from = 0;
  int to = 0;
  double capacity = 0.0;  // bits per use
};

/// Weighted directed graph of noiseless bit pipes.
class NoiselessNetwork {
 public:
  NoiselessNetwork(int n_nodes, std::vector<NoiselessEdge> edges);

  int n_nodes() const { return n_; }
  const std::vector<NoiselessEdge>& edges() const { return edges_; }

  /// Total capacity of edges leaving S into S^c.
  double cut_capacity(NodeSet cut) const;

  /// Materialises the graph as a DM network: X_j is the tuple of symbols on
  /// j's outgoing edges, Y_k the tuple of symbols on k's incoming edges, in
  /// edge-list order. Capacities must be integers.
  DmNetwork to_dm_network(const std::vector<NodeSet>& destinations) const;

 private:
  int n_;
  std::vector<NoiselessEdge> edges_;
};

/// v(S) = sum of capacities crossing S -> S^c, for cuts with S^c ∩ D ≠ ∅.
RateRegion noiseless_region(const NoiselessNetwork& net, NodeSet destinations);

/// Erasure network described by the only quantities the cut values need:
/// P_all_erased(j, R), the probability that every link from j into R is
/// erased.
class ErasureNetwork {
 public:
  ErasureNetwork(std::vector<int> input_sizes);

  /// Independent link erasures; eps[j-1][k-1] is the erasure probability of
  /// link (j, k). Diagonal entries are ignored.
  static ErasureNetwork independent(std::vector<int> input_sizes,
                                    const std::vector<std::vector<double>>& eps);

  int n_nodes() const { return static_cast<int>(input_sizes_.size()); }
  const std::vector<int>& input_sizes() const { return input_sizes_; }
  void set_all_erased(int sender, NodeSet receivers, double prob);
  /// Defaults to 1 (every link absent) when never set.
  double all_erased(int sender, NodeSet receivers) const;

 private:
  std::vector<int> input_sizes_;
  std::map<std::pair<int, std::uint16_t>, double> all_erased_;
};

/// v(S) = sum_{j∈S} log2|X_j| (1 - P_all_erased(j, S^c)).
RateRegion erasure_region(const ErasureNetwork& net, NodeSet destinations);

/// Y_k = g_k(X_1, ..., X_N) by lookup table.
class DeterministicNetwork {
 public:
  /// functions[k-1][x_index] = y_k, x_index mixed radix over x^N.
  DeterministicNetwork(std::vector<int> x_sizes, std::vector<int> y_sizes,
                       std::vector<std::vector<int>> functions);

  /// Y_k = sum_j g_jk X_j over GF(2); gf2[j-1][k-1] in {0,1}.
  static DeterministicNetwork gf2_linear(const std::vector<std::vector<int>>& gf2);

  int n_nodes() const { return static_cast<int>(x_sizes_.size()); }
  const std::vector<int>& x_sizes() const { return x_sizes_; }
  const std::vector<int>& y_sizes() const { return y_sizes_; }
  const std::vector<std::vector<int>>& functions() const { return functions_; }

  DmNetwork to_dm_network(const std::vector<NodeSet>& destinations) const;

 private:
  std::vector<int> x_sizes_;
  std::vector<int> y_sizes_;
  std::vector<std::vector<int>> functions_;
};

/// v(S) = H(Y(S^c) | X(S^c), Q) under p(q) prod_k p(x_k|q). `inputs` uses
/// the CodingDistribution layout; its compression tables are ignored.
RateRegion deterministic_region(const DeterministicNetwork& net,
                                const std::vector<double>& time_sharing,
                                const std::vector<std::vector<std::vector<double>>>& inputs,
                                NodeSet destinations);

}  // namespace nnc

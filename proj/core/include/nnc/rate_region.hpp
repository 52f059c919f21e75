#pragma once

#include <map>
#include <span>
#include <vector>

#include "nnc/cutset_report.hpp"
#include "nnc/node_set.hpp"

namespace nnc {

/// Polyhedral rate region { R >= 0 : R(S) <= v(S) for every stored S }.
///
/// Bounds are in bits and never negative. Redundant constraints are kept
/// as-is.
class RateRegion {
 public:
  RateRegion() = default;
  explicit RateRegion(int n_nodes);

  int n_nodes() const { return n_nodes_; }

  /// Tightens v(S) to min(v(S), max(value, 0)).
  void add_constraint(NodeSet set, double value);
  /// Stored bound for S, or nullptr.
  const double* bound(NodeSet set) const;
  const std::map<NodeSet, double>& constraints() const { return constraints_; }
  bool empty() const { return constraints_.empty(); }

  /// rates[k-1] is R_k.
  bool contains(std::span<const double> rates, double tol = 1e-12) const;

 private:
  int n_nodes_ = 0;
  std::map<NodeSet, double> constraints_;
};

enum class ReduceRule {
  /// v(S) = min over destinations of the raw values (cutset inner bounds).
  kMinOverDestinations,
  /// Each entry maps straight to its set; duplicates are an error.
  kIdentity,
};

/// Builds v(S) = clamp(min over entries keyed by S, 0). Entries are keyed by
/// their constrained set.
RateRegion region_from_report(const CutsetReport& report,
                              ReduceRule reduce = ReduceRule::kMinOverDestinations);

struct WeightedSumResult {
  double value = 0.0;
  bool unbounded = false;
  /// Maximiser, rates[k-1] = R_k. Empty when unbounded.
  std::vector<double> rates;
};

/// max sum_k w_k R_k over the region with R_k = 0 for k outside
/// `active_sources`. Exact vertex enumeration for up to two active sources
/// with positive weight, dense simplex otherwise. An active source with
/// positive weight and no covering constraint makes the result +inf.
WeightedSumResult max_weighted_sum(const RateRegion& region,
                                   std::span<const double> weights,
                                   NodeSet active_sources);

}  // namespace nnc

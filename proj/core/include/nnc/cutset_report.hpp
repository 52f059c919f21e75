#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nnc/node_set.hpp"

namespace nnc {

/// One evaluated constraint of a cutset-type bound.
///
/// `destination` is 0 for bounds whose value does not depend on a
/// particular decoder (outer bounds and closed-form regions).
struct CutsetEntry {
  NodeSet cut;
  int destination = 0;
  /// Rate subset the value bounds when it differs from `cut`.
  std::optional<NodeSet> constrained;
  double raw = 0.0;
  double clamped = 0.0;
  double positive_term = 0.0;
  double penalty_term = 0.0;

  NodeSet constrained_set() const { return constrained.value_or(cut); }
};

struct CutsetReport {
  std::string bound_name;
  int n_nodes = 0;
  std::vector<CutsetEntry> entries;

  /// Appends an entry with clamped = max(raw, 0).
  void add(NodeSet cut, int destination, std::optional<NodeSet> constrained,
           double positive, double penalty);
  void add_value(NodeSet cut, int destination, double raw);
};

}  // namespace nnc

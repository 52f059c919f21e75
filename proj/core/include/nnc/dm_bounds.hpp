#pragma once

#include <vector>

#include "nnc/coding_distribution.hpp"
#include "nnc/cutset_report.hpp"
#include "nnc/networks.hpp"

namespace nnc {

/// Multicast noisy network coding inner bound. For every cut S with
/// S^c ∩ D nonempty and every d in S^c ∩ D:
///   I(X(S); Yhat(S^c), Y_d | X(S^c), Q) - I(Y(S); Yhat(S) | X^N, Yhat(S^c), Y_d, Q)
CutsetReport nnc_multicast_bound(const DmNetwork& net, const CodingDistribution& dist,
                                 NodeSet destinations);

/// Same integrand with cut S paired against d in S^c ∩ D(S), where D(S) is
/// the union of the message destination sets of the nodes in S.
CutsetReport nnc_theorem2_bound(const DmNetwork& net, const CodingDistribution& dist);

/// Interference-as-noise bound with superposition layers U_k.
///
/// For each cut S, each d in D(S) ∩ S^c, and each T with
/// S ∩ S_d ⊆ T ⊆ S_d \ {d}, where S_d = {k : d ∈ D_k} ∪ {d} and T^c = S_d \ T:
///   R(T) < I(X(T), U(S); Yhat(S^c), Y_d | X(T^c), U(S^c), Q)
///          - I(Y(S); Yhat(S) | X(S_d), U^N, Yhat(S^c), Y_d, Q)
/// Entries carry T as their constrained set and are stored unreduced.
CutsetReport nnc_theorem3_bound(const DmNetwork& net, const CodingDistribution& dist);

/// Compress-forward rate of the three-node relay channel, evaluated directly:
///   min{ I(X1; Yhat2, Y3 | X2, Q), I(X1, X2; Y3 | Q) - I(Y2; Yhat2 | X1, X2, Y3, Q) }
/// Node 1 is the source, node 2 the relay, node 3 the destination; node 3
/// must not transmit and node 1 must not receive.
double relay_cf_emz(const DmNetwork& net, const CodingDistribution& dist);

/// Cutset outer bound I(X(S); Y(S^c) | X(S^c)) under an arbitrary input law
/// over X^N (mixed radix, x_N fastest), for the cuts the rule selects.
CutsetReport cutset_outer_bound(const DmNetwork& net, const std::vector<double>& input_law,
                                const DestinationRule& rule);

/// Per-cut maximum of the cutset bound over a finite family of input laws.
CutsetReport cutset_outer_bound(const DmNetwork& net,
                                const std::vector<std::vector<double>>& input_laws,
                                const DestinationRule& rule);

struct CfExtensionConstraint {
  NodeSet relays;  // T ⊆ [2:N]
  int destination = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CfExtensionResult {
  bool feasible = false;
  /// min over d of I(X1; Yhat_2^N, Y_d | X_2^N, Q); reported even when
  /// infeasible.
  double rate = 0.0;
  std::vector<CfExtensionConstraint> constraints;
};

/// Pure compress-forward extension without relay decoding, single source
/// at node 1. Feasible when for every T ⊆ [2:N] and d ∈ D
///   I(Y(T); Yhat(T) | X_2^N, Yhat(T^c), Y_d) + sum_{k∈T} I(X_2^N; Yhat_k | X_k)
///     <= I(X(T); Y_d | X(T^c), X_d)
/// with T^c = [2:N] \ T. Variables already in the conditioning are dropped
/// from the other arguments.
CfExtensionResult cf_extension_bound(const DmNetwork& net, const CodingDistribution& dist,
                                     NodeSet destinations);

}  // namespace nnc

#pragma once

#include <vector>

#include "nnc/joint_distribution.hpp"
#include "nnc/networks.hpp"

namespace nnc {

enum class CodingMode {
  /// p(q) prod_k p(x_k|q) p(yhat_k | y_k, x_k, q)
  kPlain,
  /// p(q) prod_k p(u_k, x_k|q) p(yhat_k | y_k, u_k, q)
  kSuperposition,
};

/// Time-sharing pmf, per-node input pmfs and per-node compression channels.
///
/// Table layouts (all row-major, last index fastest):
///   inputs[k][q]       plain: pmf over x_k; superposition: pmf over (u_k, x_k)
///   compression[k][q]  rows indexed by (c, y_k) where c = x_k (plain) or
///                      u_k (superposition); each row is a pmf over yhat_k
/// Node k is stored at position k-1.
struct CodingDistribution {
  std::vector<double> time_sharing{1.0};
  std::vector<std::vector<std::vector<double>>> inputs;
  std::vector<std::vector<std::vector<double>>> compression;
  std::vector<int> yhat_sizes;
  /// |U_k|; empty in plain mode.
  std::vector<int> aux_sizes;

  CodingMode mode() const {
    return aux_sizes.empty() ? CodingMode::kPlain : CodingMode::kSuperposition;
  }
  int q_size() const { return static_cast<int>(time_sharing.size()); }

  /// Uniform independent inputs, |Q| = 1 and Yhat_k = Y_k.
  static CodingDistribution uniform_identity(const DmNetwork& net);
  /// Same inputs as `uniform_identity` but Yhat_k constant (|Yhat_k| = 1).
  static CodingDistribution uniform_silent(const DmNetwork& net);

  /// Throws UsageError unless every pmf row sums to 1 within 1e-12 and is
  /// nonnegative, and every table matches the network's alphabets.
  void validate(const DmNetwork& net) const;

  /// p(x^N) = sum_q p(q) prod_k p(x_k|q), the input law the cutset bound is
  /// compared against.
  std::vector<double> input_law(const DmNetwork& net) const;
};

/// Positions of the Q, U_k, X_k, Y_k, Yhat_k variables inside an assembled
/// joint. Accessors take 1-based node indices.
class VariableMap {
 public:
  VariableMap(int n_nodes, bool with_aux);

  int n_nodes() const { return n_; }
  int q() const { return 0; }
  int u(int k) const;
  int x(int k) const { return base_x_ + k - 1; }
  int y(int k) const { return base_x_ + n_ + k - 1; }
  int yhat(int k) const { return base_x_ + 2 * n_ + k - 1; }

  VarList us(NodeSet s) const;
  VarList xs(NodeSet s) const;
  VarList ys(NodeSet s) const;
  VarList yhats(NodeSet s) const;

 private:
  int n_;
  bool with_aux_;
  int base_x_;
};

struct NetworkJoint {
  JointDistribution joint;
  VariableMap vars;
};

/// Joint pmf of (Q, [U^N], X^N, Y^N, Yhat^N) under the product coding
/// distribution and the channel. Throws SizeError past 2^24 states.
NetworkJoint assemble_joint(const DmNetwork& net, const CodingDistribution& dist,
                            CodingMode mode);

/// Concatenates variable lists.
VarList join(std::initializer_list<VarList> parts);

}  // namespace nnc

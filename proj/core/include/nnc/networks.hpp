#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nnc/node_set.hpp"

namespace nnc {

/// Upper bound on the number of states of any dense probability tensor.
inline constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 24;

/// Mixed-radix index helpers; the rightmost digit varies fastest.
std::uint64_t state_count(std::span<const int> radices);

/// N-node discrete memoryless network p(y^N | x^N).
///
/// The channel is stored as a dense row-major matrix: one row per input
/// tuple x^N (mixed radix over x_1..x_N), one column per output tuple y^N
/// (mixed radix over y_1..y_N). A node that sends nothing has |X_k| = 1,
/// a node that hears nothing has |Y_k| = 1.
class DmNetwork {
 public:
  DmNetwork(std::vector<int> x_sizes, std::vector<int> y_sizes,
            std::vector<double> channel, std::vector<NodeSet> destinations);

  int n_nodes() const { return static_cast<int>(x_sizes_.size()); }
  const std::vector<int>& x_sizes() const { return x_sizes_; }
  const std::vector<int>& y_sizes() const { return y_sizes_; }
  std::uint64_t input_count() const { return inputs_; }
  std::uint64_t output_count() const { return outputs_; }
  /// p(y^N | x^N) by flat indices.
  double channel(std::uint64_t x_index, std::uint64_t y_index) const {
    return channel_[x_index * outputs_ + y_index];
  }
  std::span<const double> channel_row(std::uint64_t x_index) const {
    return {channel_.data() + x_index * outputs_, outputs_};
  }
  const std::vector<NodeSet>& destinations() const { return destinations_; }
  /// Union of all destination sets.
  NodeSet all_destinations() const;

 private:
  std::vector<int> x_sizes_;
  std::vector<int> y_sizes_;
  std::uint64_t inputs_ = 0;
  std::uint64_t outputs_ = 0;
  std::vector<double> channel_;
  std::vector<NodeSet> destinations_;
};

/// Y^N = H X^N + Z^N with unit-variance noise and per-sender power P.
///
/// `gains(j, k)` (zero based) is the amplitude gain from sender j+1 into
/// receiver k+1, so the receiver-major channel matrix is gains^T.
class GaussianNetwork {
 public:
  GaussianNetwork(Eigen::MatrixXd gains, double power, std::vector<NodeSet> destinations);

  int n_nodes() const { return static_cast<int>(gains_.rows()); }
  const Eigen::MatrixXd& gains() const { return gains_; }
  double gain(int from, int to) const { return gains_(from - 1, to - 1); }
  double power() const { return power_; }
  const std::vector<NodeSet>& destinations() const { return destinations_; }
  NodeSet all_destinations() const;

  /// |S^c| x |S| submatrix: rows are receivers in S^c, columns senders in S.
  Eigen::MatrixXd cut_matrix(NodeSet cut) const;

 private:
  Eigen::MatrixXd gains_;
  double power_;
  std::vector<NodeSet> destinations_;
};

}  // namespace nnc

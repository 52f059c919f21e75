#include "nnc/networks.hpp"

#include <cmath>
#include <string>

#include "nnc/error.hpp"

namespace nnc {

std::uint64_t state_count(std::span<const int> radices) {
  std::uint64_t count = 1;
  for (int r : radices) {
    if (r < 1) throw UsageError("alphabet sizes must be at least 1");
    count *= static_cast<std::uint64_t>(r);
    if (count > kMaxStates) {
      throw SizeError("state count exceeds 2^24");
    }
  }
  return count;
}

namespace {

NodeSet union_of(const std::vector<NodeSet>& sets) {
  NodeSet out;
  for (NodeSet s : sets) out = out | s;
  return out;
}

void check_destinations(const std::vector<NodeSet>& dests, int n) {
  if (dests.size() != static_cast<std::size_t>(n)) {
    throw UsageError("need one destination set per node");
  }
  for (NodeSet d : dests) {
    if (!d.is_subset_of(NodeSet::full(n))) {
      throw UsageError("destination set " + d.to_string() + " names a node outside the network");
    }
  }
}

}  // namespace

DmNetwork::DmNetwork(std::vector<int> x_sizes, std::vector<int> y_sizes,
                     std::vector<double> channel, std::vector<NodeSet> destinations)
    : x_sizes_(std::move(x_sizes)),
      y_sizes_(std::move(y_sizes)),
      channel_(std::move(channel)),
      destinations_(std::move(destinations)) {
  const int n = n_nodes();
  if (n < 1 || n > kMaxNodes) throw SizeError("DM networks hold 1 to 16 nodes");
  if (y_sizes_.size() != x_sizes_.size()) {
    throw UsageError("input and output alphabet lists differ in length");
  }
  inputs_ = state_count(x_sizes_);
  outputs_ = state_count(y_sizes_);
  if (inputs_ * outputs_ > kMaxStates) {
    throw SizeError("channel tensor exceeds 2^24 joint states");
  }
  if (channel_.size() != inputs_ * outputs_) {
    throw UsageError("channel tensor has " + std::to_string(channel_.size()) +
                     " entries, expected " + std::to_string(inputs_ * outputs_));
  }
  for (std::uint64_t x = 0; x < inputs_; ++x) {
    double sum = 0.0;
    for (double p : channel_row(x)) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError("channel row " + std::to_string(x) + " has an entry outside [0,1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw UsageError("channel row " + std::to_string(x) + " sums to " + std::to_string(sum));
    }
  }
  check_destinations(destinations_, n);
}

NodeSet DmNetwork::all_destinations() const { return union_of(destinations_); }

GaussianNetwork::GaussianNetwork(Eigen::MatrixXd gains, double power,
                                 std::vector<NodeSet> destinations)
    : gains_(std::move(gains)), power_(power), destinations_(std::move(destinations)) {
  if (gains_.rows() != gains_.cols()) throw UsageError("gain matrix must be square");
  if (gains_.rows() < 1 || gains_.rows() > kMaxNodes) {
    throw SizeError("Gaussian networks hold 1 to 16 nodes");
  }
  if (!gains_.allFinite()) throw UsageError("gain matrix has non-finite entries");
  if (!(power_ >= 0.0) || !std::isfinite(power_)) throw UsageError("power must be finite and >= 0");
  check_destinations(destinations_, n_nodes());
}

NodeSet GaussianNetwork::all_destinations() const { return union_of(destinations_); }

Eigen::MatrixXd GaussianNetwork::cut_matrix(NodeSet cut) const {
  const int n = n_nodes();
  const auto senders = cut.members();
  const auto receivers = cut.complement(n).members();
  Eigen::MatrixXd g(static_cast<Eigen::Index>(receivers.size()),
                    static_cast<Eigen::Index>(senders.size()));
  for (std::size_t r = 0; r < receivers.size(); ++r) {
    for (std::size_t c = 0; c < senders.size(); ++c) {
      g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          gain(senders[c], receivers[r]);
    }
  }
  return g;
}

}  // namespace nnc

#include "nnc/joint_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "nnc/error.hpp"
#include "nnc/networks.hpp"

namespace nnc {

namespace {

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

JointDistribution::JointDistribution(std::vector<std::string> labels,
                                     std::vector<int> cardinalities,
                                     std::vector<double> probs)
    : labels_(std::move(labels)), cards_(std::move(cardinalities)), probs_(std::move(probs)) {
  if (labels_.size() != cards_.size()) {
    throw UsageError("joint distribution needs one label per variable");
  }
  for (int c : cards_) {
    if (c > std::numeric_limits<std::uint16_t>::max()) {
      throw SizeError("variable cardinality above 65535");
    }
  }
  const std::uint64_t states = state_count(cards_);
  if (probs_.size() != states) {
    throw UsageError("joint tensor has " + std::to_string(probs_.size()) +
                     " entries, expected " + std::to_string(states));
  }
  double total = 0.0;
  std::size_t nonzero = 0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw UsageError("joint distribution has a negative or NaN entry");
    total += p;
    if (p > 0.0) ++nonzero;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw UsageError("joint distribution sums to " + std::to_string(total));
  }

  const std::size_t nv = cards_.size();
  support_probs_.reserve(nonzero);
  support_digits_.assign(nv, {});
  for (auto& d : support_digits_) d.reserve(nonzero);
  std::vector<int> digit(nv, 0);
  for (std::size_t idx = 0; idx < probs_.size(); ++idx) {
    if (probs_[idx] > 0.0) {
      support_probs_.push_back(probs_[idx]);
      for (std::size_t v = 0; v < nv; ++v) {
        support_digits_[v].push_back(static_cast<std::uint16_t>(digit[v]));
      }
    }
    for (std::size_t v = nv; v-- > 0;) {
      if (++digit[v] < cards_[v]) break;
      digit[v] = 0;
    }
  }
}

int JointDistribution::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

namespace {

// Mixed-radix strides of `vars` (last fastest) and the product of their
// cardinalities.
std::pair<std::vector<std::uint64_t>, std::uint64_t> strides_for(
    const VarList& vars, const std::vector<int>& cards) {
  std::vector<std::uint64_t> strides(vars.size());
  std::uint64_t prod = 1;
  for (std::size_t i = vars.size(); i-- > 0;) {
    strides[i] = prod;
    prod *= static_cast<std::uint64_t>(cards[static_cast<std::size_t>(vars[i])]);
  }
  return {strides, prod};
}

void check_vars(const VarList& vars, int num_vars) {
  std::vector<bool> seen(static_cast<std::size_t>(num_vars), false);
  for (int v : vars) {
    if (v < 0 || v >= num_vars) throw UsageError("variable index out of range");
    if (seen[static_cast<std::size_t>(v)]) throw UsageError("variable listed twice");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

double JointDistribution::entropy(const VarList& vars) const {
  check_vars(vars, num_vars());
  if (vars.empty()) return 0.0;
  const auto [strides, prod] = strides_for(vars, cards_);
  const std::size_t support = support_probs_.size();

  std::vector<std::uint64_t> keys(support, 0);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto& digits = support_digits_[static_cast<std::size_t>(vars[i])];
    const std::uint64_t stride = strides[i];
    for (std::size_t s = 0; s < support; ++s) keys[s] += digits[s] * stride;
  }

  double h = 0.0;
  if (prod <= 4 * static_cast<std::uint64_t>(support) + 4096) {
    std::vector<double> marg(prod, 0.0);
    for (std::size_t s = 0; s < support; ++s) marg[keys[s]] += support_probs_[s];
    for (double p : marg) h += entropy_term(p);
    return h;
  }
  std::vector<std::pair<std::uint64_t, double>> pairs(support);
  for (std::size_t s = 0; s < support; ++s) pairs[s] = {keys[s], support_probs_[s]};
  std::sort(pairs.begin(), pairs.end());
  std::size_t s = 0;
  while (s < pairs.size()) {
    double p = 0.0;
    const std::uint64_t key = pairs[s].first;
    for (; s < pairs.size() && pairs[s].first == key; ++s) p += pairs[s].second;
    h += entropy_term(p);
  }
  return h;
}

std::vector<double> JointDistribution::marginal(const VarList& vars) const {
  check_vars(vars, num_vars());
  const auto [strides, prod] = strides_for(vars, cards_);
  std::vector<double> marg(prod, 0.0);
  for (std::size_t s = 0; s < support_probs_.size(); ++s) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      key += support_digits_[static_cast<std::size_t>(vars[i])][s] * strides[i];
    }
    marg[key] += support_probs_[s];
  }
  return marg;
}

}  // namespace nnc

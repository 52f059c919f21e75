#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nnc {

using VarList = std::vector<int>;

/// Dense pmf over a list of named discrete variables.
///
/// Probabilities are stored row-major with the last variable varying
/// fastest. The nonzero support is indexed once at construction so that
/// marginal entropies cost O(support) rather than O(states).
class JointDistribution {
 public:
  JointDistribution(std::vector<std::string> labels, std::vector<int> cardinalities,
                    std::vector<double> probs);

  int num_vars() const { return static_cast<int>(cards_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& cardinalities() const { return cards_; }
  std::span<const double> probs() const { return probs_; }
  std::size_t support_size() const { return support_probs_.size(); }
  /// Index of a label, or -1.
  int find(const std::string& label) const;

  /// Joint entropy H(vars) in bits. The empty list has entropy 0.
  double entropy(const VarList& vars) const;
  /// Marginal pmf over `vars` in the given order.
  std::vector<double> marginal(const VarList& vars) const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> cards_;
  std::vector<double> probs_;
  // Support entries: digits are stored variable-major, one row per variable.
  std::vector<double> support_probs_;
  std::vector<std::vector<std::uint16_t>> support_digits_;
};

}  // namespace nnc

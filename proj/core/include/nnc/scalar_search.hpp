#pragma once

#include <functional>

namespace nnc {

/// Log-spaced grid followed by golden-section refinement.
struct SweepGrid {
  double lower = 1e-4;
  double upper = 1e4;
  int points = 400;
  int refine_iterations = 60;

  /// Throws UsageError unless 0 < lower <= upper and points >= 2.
  void validate() const;
  /// i-th grid point, i in [0, points).
  double point(int i) const;
};

struct ScalarOptimum {
  double argmax = 0.0;
  double value = 0.0;
};

/// Maximises f over [grid.lower, grid.upper]. Non-finite values count as
/// -inf. Grid ties go to the smaller parameter; refinement (in log
/// coordinates, between the neighbours of the best grid point) only
/// replaces the grid optimum on strict improvement. Throws
/// NoFeasiblePointError when every grid value is -inf.
ScalarOptimum scalar_maximize(const std::function<double(double)>& f, const SweepGrid& grid);

}  // namespace nnc

#include "nnc/scalar_search.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nnc/error.hpp"

namespace nnc {

void SweepGrid::validate() const {
  if (!(lower > 0.0) || !(upper >= lower) || !std::isfinite(upper)) {
    throw UsageError("sweep grid bounds must satisfy 0 < lower <= upper < inf");
  }
  if (points < 2) throw UsageError("sweep grid needs at least 2 points");
  if (refine_iterations < 0) throw UsageError("refinement iterations must be >= 0");
}

double SweepGrid::point(int i) const {
  if (i <= 0) return lower;
  if (i >= points - 1) return upper;
  const double t = static_cast<double>(i) / (points - 1);
  return std::exp(std::log(lower) + t * (std::log(upper) - std::log(lower)));
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_eval(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  return std::isfinite(v) ? v : kNegInf;
}

}  // namespace

ScalarOptimum scalar_maximize(const std::function<double(double)>& f, const SweepGrid& grid) {
  grid.validate();
  int best_i = -1;
  double best = kNegInf;
  for (int i = 0; i < grid.points; ++i) {
    const double v = safe_eval(f, grid.point(i));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  if (best_i < 0) {
    throw NoFeasiblePointError("no grid point in [" + std::to_string(grid.lower) + ", " +
                               std::to_string(grid.upper) + "] gives a finite value");
  }
  ScalarOptimum opt{grid.point(best_i), best};

  double a = std::log(grid.point(best_i > 0 ? best_i - 1 : 0));
  double b = std::log(grid.point(best_i < grid.points - 1 ? best_i + 1 : best_i));
  if (!(b > a)) return opt;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = safe_eval(f, std::exp(c));
  double fd = safe_eval(f, std::exp(d));
  auto consider = [&opt](double t, double v) {
    if (v > opt.value) {
      opt.value = v;
      opt.argmax = std::exp(t);
    }
  };
  consider(c, fc);
  consider(d, fd);
  for (int it = 0; it < grid.refine_iterations; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = safe_eval(f, std::exp(c));
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = safe_eval(f, std::exp(d));
      consider(d, fd);
    }
  }
  return opt;
}

}  // namespace nnc

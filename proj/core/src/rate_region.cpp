#include "nnc/rate_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nnc/error.hpp"

namespace nnc {

void CutsetReport::add(NodeSet cut, int destination,
                       std::optional<NodeSet> constrained, double positive,
                       double penalty) {
  CutsetEntry e;
  e.cut = cut;
  e.destination = destination;
  e.constrained = constrained;
  e.positive_term = positive;
  e.penalty_term = penalty;
  e.raw = positive - penalty;
  e.clamped = std::max(e.raw, 0.0);
  entries.push_back(e);
}

void CutsetReport::add_value(NodeSet cut, int destination, double raw) {
  add(cut, destination, std::nullopt, raw, 0.0);
}

RateRegion::RateRegion(int n_nodes) : n_nodes_(n_nodes) {
  if (n_nodes < 0 || n_nodes > kMaxNodes) {
    throw SizeError("rate region supports at most 16 nodes");
  }
}

void RateRegion::add_constraint(NodeSet set, double value) {
  if (std::isnan(value)) throw NumericalError("NaN rate constraint for " + set.to_string());
  const double v = std::max(value, 0.0);
  auto [it, inserted] = constraints_.emplace(set, v);
  if (!inserted) it->second = std::min(it->second, v);
}

const double* RateRegion::bound(NodeSet set) const {
  auto it = constraints_.find(set);
  return it == constraints_.end() ? nullptr : &it->second;
}

bool RateRegion::contains(std::span<const double> rates, double tol) const {
  for (double r : rates) {
    if (r < -tol) return false;
  }
  for (const auto& [set, v] : constraints_) {
    double sum = 0.0;
    for (int k : set.members()) {
      if (static_cast<std::size_t>(k) <= rates.size()) sum += rates[k - 1];
    }
    if (sum > v + tol) return false;
  }
  return true;
}

RateRegion region_from_report(const CutsetReport& report, ReduceRule reduce) {
  RateRegion region(report.n_nodes);
  if (reduce == ReduceRule::kIdentity) {
    for (const auto& e : report.entries) {
      if (region.bound(e.constrained_set()) != nullptr) {
        throw UsageError("identity reduction found two entries for " +
                         e.constrained_set().to_string());
      }
      region.add_constraint(e.constrained_set(), e.raw);
    }
    return region;
  }
  for (const auto& e : report.entries) region.add_constraint(e.constrained_set(), e.raw);
  return region;
}

namespace {

struct Row {
  std::vector<double> coeff;  // 0/1 over the reduced variables
  double rhs;
};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exact optimum for one or two variables by enumerating the vertices of the
// polygon cut out by the rows and the axes.
WeightedSumResult small_lp(const std::vector<Row>& rows, const std::vector<double>& w) {
  const std::size_t n = w.size();
  WeightedSumResult best;
  if (n == 1) {
    double cap = kInf;
    for (const auto& r : rows) cap = std::min(cap, r.rhs);
    best.value = w[0] * cap;
    best.rates = {cap};
    return best;
  }
  // Lines a*x + b*y = c, starting with the two axes.
  struct Line { double a, b, c; };
  std::vector<Line> lines{{1, 0, 0}, {0, 1, 0}};
  for (const auto& r : rows) lines.push_back({r.coeff[0], r.coeff[1], r.rhs});

  auto feasible = [&](double x, double y) {
    const double tol = 1e-12 * (1.0 + std::abs(x) + std::abs(y));
    if (x < -tol || y < -tol) return false;
    for (const auto& r : rows) {
      if (r.coeff[0] * x + r.coeff[1] * y > r.rhs + tol) return false;
    }
    return true;
  };

  bool found = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line& p = lines[i];
      const Line& q = lines[j];
      const double det = p.a * q.b - p.b * q.a;
      if (det == 0.0) continue;
      const double x = std::max((p.c * q.b - p.b * q.c) / det, 0.0);
      const double y = std::max((p.a * q.c - p.c * q.a) / det, 0.0);
      if (!feasible(x, y)) continue;
      const double value = w[0] * x + w[1] * y;
      if (!found || value > best.value) {
        best.value = value;
        best.rates = {x, y};
        found = true;
      }
    }
  }
  if (!found) throw NumericalError("rate region vertex enumeration found no vertex");
  return best;
}

// Dense tableau simplex for max w.x, A x <= b, x >= 0 with b >= 0 so the
// slack basis is feasible. Bland's rule prevents cycling.
WeightedSumResult simplex(const std::vector<Row>& rows, const std::vector<double>& w) {
  const std::size_t m = rows.size();
  const std::size_t n = w.size();
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = rows[i].coeff[j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = rows[i].rhs;
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -w[j];

  constexpr double eps = 1e-12;
  for (int iter = 0; iter < 100000; ++iter) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[m][j] < -eps) { enter = j; break; }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    double best_ratio = kInf;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > eps) {
        const double ratio = t[i][cols - 1] / t[i][enter];
        if (ratio < best_ratio - eps ||
            (std::abs(ratio - best_ratio) <= eps && leave < m && basis[i] < basis[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) {
      WeightedSumResult r;
      r.value = kInf;
      r.unbounded = true;
      return r;
    }
    const double pivot = t[leave][enter];
    for (double& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0.0) continue;
      const double f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  WeightedSumResult r;
  r.rates.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) r.rates[basis[i]] = std::max(t[i][cols - 1], 0.0);
  }
  r.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) r.value += w[j] * r.rates[j];
  return r;
}

}  // namespace

WeightedSumResult max_weighted_sum(const RateRegion& region,
                                   std::span<const double> weights,
                                   NodeSet active_sources) {
  const int n = region.n_nodes();
  if (weights.size() != static_cast<std::size_t>(n)) {
    throw UsageError("weight vector length must equal the number of nodes");
  }
  std::vector<int> vars;
  std::vector<double> w;
  for (int k = 1; k <= n; ++k) {
    if (weights[k - 1] < 0.0 || std::isnan(weights[k - 1])) {
      throw UsageError("weights must be nonnegative");
    }
    // Zero-weight sources sit at rate 0 in some optimum: every constraint
    // has nonnegative coefficients and a nonnegative bound.
    if (active_sources.contains(k) && weights[k - 1] > 0.0) {
      vars.push_back(k);
      w.push_back(weights[k - 1]);
    }
  }

  WeightedSumResult result;
  result.rates.assign(static_cast<std::size_t>(n), 0.0);
  if (vars.empty()) return result;

  std::vector<Row> rows;
  std::vector<bool> covered(vars.size(), false);
  for (const auto& [set, v] : region.constraints()) {
    Row row{std::vector<double>(vars.size(), 0.0), v};
    bool any = false;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (set.contains(vars[j])) {
        row.coeff[j] = 1.0;
        covered[j] = true;
        any = true;
      }
    }
    if (any) rows.push_back(std::move(row));
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    result.value = kInf;
    result.unbounded = true;
    result.rates.clear();
    return result;
  }

  WeightedSumResult reduced = vars.size() <= 2 ? small_lp(rows, w) : simplex(rows, w);
  if (reduced.unbounded) {
    reduced.rates.clear();
    return reduced;
  }
  result.value = reduced.value;
  for (std::size_t j = 0; j < vars.size(); ++j) result.rates[vars[j] - 1] = reduced.rates[j];
  return result;
}

}  // namespace nnc

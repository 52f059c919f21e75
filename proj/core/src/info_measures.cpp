#include "nnc/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nnc/error.hpp"

namespace nnc {

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

namespace {

VarList set_union(const VarList& a, const VarList& b) {
  VarList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool overlaps(const VarList& a, const VarList& b) {
  for (int v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end()) return true;
  }
  return false;
}

}  // namespace

double conditional_mi(const JointDistribution& joint, const VarList& a, const VarList& b,
                      const VarList& c) {
  if (overlaps(a, b) || overlaps(a, c) || overlaps(b, c)) {
    throw UsageError("conditional mutual information needs disjoint variable sets");
  }
  const VarList ac = set_union(a, c);
  const VarList bc = set_union(b, c);
  const VarList abc = set_union(ac, b);
  const double value =
      joint.entropy(ac) + joint.entropy(bc) - joint.entropy(abc) - joint.entropy(c);
  if (value < -1e-9) {
    throw NumericalError("conditional mutual information evaluated to " +
                         std::to_string(value) + " bits");
  }
  return std::max(value, 0.0);
}

double log2_det(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw NumericalError("log-determinant of a non-square matrix");
  if (m.size() == 0) return 0.0;
  if (!m.allFinite()) throw NumericalError("log-determinant of a non-finite matrix");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * (1.0 + m.cwiseAbs().maxCoeff())) throw NumericalError("log-determinant input is not symmetric");
  const Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("log-determinant input is not positive definite");
  }
  const Eigen::VectorXd diag = llt.matrixLLT().diagonal();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (!(diag(i) > 0.0)) throw NumericalError("log-determinant input is not positive definite");
    sum += std::log2(diag(i));
  }
  return 2.0 * sum;
}

double gauss_cut_rate(const GaussianNetwork& net, NodeSet cut) {
  const int n = net.n_nodes();
  if (cut.empty() || cut == NodeSet::full(n)) {
    throw UsageError("Gaussian cut rate needs a nonempty proper cutset");
  }
  const Eigen::MatrixXd g = net.cut_matrix(cut);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(g.rows(), g.rows());
  m.noalias() += (net.power() / 2.0) * g * g.transpose();
  // Exact symmetry; the product can differ from its transpose in the last ulp.
  m = 0.5 * (m + m.transpose()).eval();
  return 0.5 * log2_det(m);
}

}  // namespace nnc

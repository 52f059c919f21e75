#pragma once

#include <cmath>

#include <Eigen/Dense>

#include "nnc/joint_distribution.hpp"
#include "nnc/networks.hpp"

namespace nnc {

/// Binary entropy in bits.
double binary_entropy(double p);

/// I(A;B|C) in bits from four joint entropies. The sets must be pairwise
/// disjoint. Values in [-1e-9, 0) are returned as 0; anything more negative
/// is an internal-consistency NumericalError.
double conditional_mi(const JointDistribution& joint, const VarList& a, const VarList& b,
                      const VarList& c = {});

/// log2 det(M) through a Cholesky factorisation. M must be symmetric within
/// 1e-10 and positive definite, otherwise NumericalError.
double log2_det(const Eigen::MatrixXd& m);

/// 1/2 log2 det(I + (P/2) G(S) G(S)^T).
double gauss_cut_rate(const GaussianNetwork& net, NodeSet cut);

/// AWGN rate function C(x) = 1/2 log2(1 + x).
inline double awgn_capacity(double snr) { return 0.5 * std::log2(1.0 + snr); }

}  // namespace nnc

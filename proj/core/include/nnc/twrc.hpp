#pragma once

#include "nnc/scalar_search.hpp"

namespace nnc {

/// Gaussian two-way relay channel on a line: nodes 1 and 2 one unit apart,
/// relay 3 at distance d from node 1, path-loss exponent gamma.
struct TwrcConfig {
  double distance = 0.5;
  double path_loss = 3.0;
  double power = 10.0;

  struct Gains {
    double g12, g21, g13, g31, g23, g32;
    /// A gain hit the 1e8 cap (relay on top of a terminal).
    bool capped;
  };
  /// Recomputed on every call: g12 = g21 = 1, g13 = g31 = d^(-gamma/2),
  /// g23 = g32 = (1-d)^(-gamma/2), each capped at 1e8.
  Gains gains() const;
};

enum class TwrcScheme { kNoisyNetworkCoding, kAmplifyForward, kCompressForward };

struct TwrcRates {
  double r1 = 0.0;
  double r2 = 0.0;
  double sum = 0.0;
  /// sigma^2 for NNC and CF, alpha for AF.
  double parameter = 0.0;
  bool gains_capped = false;
};

/// Per-user rate caps of the NNC bound at quantisation noise sigma2, clamped
/// at 0.
TwrcRates twrc_nnc_at(const TwrcConfig& cfg, double sigma2);
/// AF rate caps at relay amplification alpha.
TwrcRates twrc_af_at(const TwrcConfig& cfg, double alpha);
/// Largest admissible AF amplification.
double twrc_af_alpha_max(const TwrcConfig& cfg);
/// Smallest sigma^2 the CF scheme admits.
double twrc_cf_sigma2_min(const TwrcConfig& cfg);
/// CF rate caps at sigma2 (feasibility is not checked).
TwrcRates twrc_cf_at(const TwrcConfig& cfg, double sigma2);

/// Optimised sum rate. NNC maximises over sigma^2 on `grid`; AF maximises
/// over alpha on a log grid ending at alpha_max with grid.points points;
/// CF evaluates at its smallest feasible sigma^2.
TwrcRates twrc_rates(const TwrcConfig& cfg, TwrcScheme scheme, const SweepGrid& grid);

}  // namespace nnc

#pragma once

#include <string>
#include <vector>

#include "nnc/scalar_search.hpp"

namespace nnc {

/// Gaussian interference relay channel: sources 1 and 2, destinations 4 and
/// 5, relay 3 with a common noiseless link of rate R0 to both destinations.
struct IrcConfig {
  double g13 = 0.1;
  double g23 = 0.5;
  double g14 = 1.0;
  double g24 = 0.5;
  double g15 = 0.5;
  double g25 = 1.0;
  double relay_rate = 1.0;  // R0, bits
  double power = 1.0;

  /// The gain set used for the sum-rate comparison figure. With
  /// `alternate`, g13 and g23 trade values (g13 = 0.5, g23 = 0.1).
  static IrcConfig figure_gains(double power, double relay_rate, bool alternate = false);
  void validate() const;
};

enum class IrcScheme {
  kNncDecodeAll,     // multicast-completion style decoding (pairs + sum rates)
  kNncTreatNoise,    // superposition, interference treated as noise
  kCompressForward,
  kHashForward,
};

struct NamedConstraint {
  std::string name;
  double value = 0.0;
};

struct IrcRates {
  double sum = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double sigma2 = 0.0;
  /// Clamped constraint values at sigma2, in printed order.
  std::vector<NamedConstraint> constraints;
  /// CF/HF had no feasible sigma^2 and the feasibility-boundary limit was
  /// used instead.
  bool flagged = false;
};

/// Lower (CF) and upper (HF) feasibility limits on sigma^2; +inf when R0 = 0.
double irc_cf_sigma2_min(const IrcConfig& cfg);
double irc_hf_sigma2_max(const IrcConfig& cfg);

/// Rate region of a scheme at a fixed sigma^2, solved for the best sum rate.
/// sigma2 may be +inf (the uncompressed-relay limit).
IrcRates irc_rates_at(const IrcConfig& cfg, IrcScheme scheme, double sigma2);

/// Best sum rate over sigma^2 for the scheme.
IrcRates irc_rates(const IrcConfig& cfg, IrcScheme scheme, const SweepGrid& grid);

}  // namespace nnc

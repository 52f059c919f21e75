#include "nnc/twrc.hpp"

#include <algorithm>
#include <cmath>

#include "nnc/error.hpp"
#include "nnc/info_measures.hpp"

namespace nnc {

namespace {

constexpr double kGainCap = 1e8;

double capped_gain(double base, double exponent, bool& capped) {
  const double g = std::pow(base, -exponent / 2.0);
  if (!(g <= kGainCap)) {
    capped = true;
    return kGainCap;
  }
  return g;
}

void check(const TwrcConfig& cfg) {
  if (!(cfg.distance >= 0.0 && cfg.distance <= 1.0)) {
    throw UsageError("relay location must lie in [0,1]");
  }
  if (!(cfg.path_loss >= 0.0)) throw UsageError("path-loss exponent must be >= 0");
  if (!(cfg.power >= 0.0) || !std::isfinite(cfg.power)) throw UsageError("power must be >= 0");
}

}  // namespace

TwrcConfig::Gains TwrcConfig::gains() const {
  Gains g{};
  g.capped = false;
  g.g12 = g.g21 = 1.0;
  g.g13 = g.g31 = capped_gain(distance, path_loss, g.capped);
  g.g23 = g.g32 = capped_gain(1.0 - distance, path_loss, g.capped);
  return g;
}

TwrcRates twrc_nnc_at(const TwrcConfig& cfg, double sigma2) {
  check(cfg);
  const auto g = cfg.gains();
  const double p = cfg.power;
  const double quant = awgn_capacity(1.0 / sigma2);
  const double r1 = std::min(
      awgn_capacity((g.g13 * g.g13 * p + (1.0 + sigma2) * g.g12 * g.g12 * p) / (1.0 + sigma2)),
      awgn_capacity(g.g12 * g.g12 * p + g.g32 * g.g32 * p) - quant);
  // The second cap for user 2 carries a single power P on both terms
  // (g21^2 P + g31^2 P); the per-sender power is the same throughout.
  const double r2 = std::min(
      awgn_capacity((g.g23 * g.g23 * p + (1.0 + sigma2) * g.g21 * g.g21 * p) / (1.0 + sigma2)),
      awgn_capacity(g.g21 * g.g21 * p + g.g31 * g.g31 * p) - quant);
  TwrcRates out;
  out.r1 = std::max(r1, 0.0);
  out.r2 = std::max(r2, 0.0);
  out.sum = out.r1 + out.r2;
  out.parameter = sigma2;
  out.gains_capped = g.capped;
  return out;
}

double twrc_af_alpha_max(const TwrcConfig& cfg) {
  check(cfg);
  const auto g = cfg.gains();
  const double p = cfg.power;
  return std::sqrt(p / (g.g13 * g.g13 * p + g.g23 * g.g23 * p + 1.0));
}

TwrcRates twrc_af_at(const TwrcConfig& cfg, double alpha) {
  check(cfg);
  const auto g = cfg.gains();
  const double p = cfg.power;
  const double a2 = alpha * alpha;
  auto rate = [](double a, double b) {
    // a >= |b| holds analytically; guard the square root against rounding.
    const double disc = std::max(a * a - b * b, 0.0);
    return 0.5 * std::log2((a + std::sqrt(disc)) / 2.0);
  };
  const double den1 = g.g32 * g.g32 * a2 + 1.0;
  const double a_1 = 1.0 + p * (g.g12 * g.g12 + a2 * g.g32 * g.g32 * g.g13 * g.g13) / den1;
  const double b_1 = 2.0 * p * alpha * g.g32 * g.g13 * g.g12 / den1;
  const double den2 = g.g31 * g.g31 * a2 + 1.0;
  const double a_2 = 1.0 + p * (g.g21 * g.g21 + a2 * g.g31 * g.g31 * g.g23 * g.g23) / den2;
  const double b_2 = 2.0 * p * alpha * g.g31 * g.g23 * g.g21 / den2;
  TwrcRates out;
  out.r1 = std::max(rate(a_1, b_1), 0.0);
  out.r2 = std::max(rate(a_2, b_2), 0.0);
  out.sum = out.r1 + out.r2;
  out.parameter = alpha;
  out.gains_capped = g.capped;
  return out;
}

double twrc_cf_sigma2_min(const TwrcConfig& cfg) {
  check(cfg);
  const auto g = cfg.gains();
  const double p = cfg.power;
  const double den = std::min(g.g32 * g.g32, g.g31 * g.g31) * p;
  const double t1 =
      ((1.0 + g.g12 * g.g12 * p) * (1.0 + g.g13 * g.g13 * p) - std::pow(g.g12 * g.g13 * p, 2)) / den;
  const double t2 =
      ((1.0 + g.g21 * g.g21 * p) * (1.0 + g.g23 * g.g23 * p) - std::pow(g.g21 * g.g23 * p, 2)) / den;
  return std::max(t1, t2);
}

TwrcRates twrc_cf_at(const TwrcConfig& cfg, double sigma2) {
  check(cfg);
  const auto g = cfg.gains();
  const double p = cfg.power;
  TwrcRates out;
  out.r1 = awgn_capacity((g.g13 * g.g13 * p + (1.0 + sigma2) * g.g12 * g.g12 * p) / (1.0 + sigma2));
  out.r2 = awgn_capacity((g.g23 * g.g23 * p + (1.0 + sigma2) * g.g21 * g.g21 * p) / (1.0 + sigma2));
  out.sum = out.r1 + out.r2;
  out.parameter = sigma2;
  out.gains_capped = g.capped;
  return out;
}

TwrcRates twrc_rates(const TwrcConfig& cfg, TwrcScheme scheme, const SweepGrid& grid) {
  check(cfg);
  grid.validate();
  switch (scheme) {
    case TwrcScheme::kNoisyNetworkCoding: {
      const auto opt =
          scalar_maximize([&](double s) { return twrc_nnc_at(cfg, s).sum; }, grid);
      return twrc_nnc_at(cfg, opt.argmax);
    }
    case TwrcScheme::kAmplifyForward: {
      const double amax = twrc_af_alpha_max(cfg);
      if (!(amax > 0.0)) return twrc_af_at(cfg, 0.0);
      SweepGrid alpha_grid = grid;
      alpha_grid.upper = amax;
      alpha_grid.lower = amax * (grid.lower / grid.upper);
      const auto opt =
          scalar_maximize([&](double a) { return twrc_af_at(cfg, a).sum; }, alpha_grid);
      return twrc_af_at(cfg, opt.argmax);
    }
    case TwrcScheme::kCompressForward:
      return twrc_cf_at(cfg, twrc_cf_sigma2_min(cfg));
  }
  throw UsageError("unknown two-way relay scheme");
}

}  // namespace nnc

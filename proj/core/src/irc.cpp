#include "nnc/irc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nnc/error.hpp"
#include "nnc/info_measures.hpp"
#include "nnc/rate_region.hpp"

namespace nnc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sq(double x) { return x * x; }

// Expressions are written in w = 1/(1 + sigma^2) and inv = 1/sigma^2 so
// that sigma^2 = +inf evaluates to its limit.
struct Quantisation {
  double w;
  double inv;
  explicit Quantisation(double sigma2)
      : w(std::isinf(sigma2) ? 0.0 : 1.0 / (1.0 + sigma2)),
        inv(std::isinf(sigma2) ? 0.0 : 1.0 / sigma2) {}
};

// Rates of the compress-forward style terms for user 1 (into node 4) and
// user 2 (into node 5).
double cf_user1(const IrcConfig& c, const Quantisation& q) {
  const double p = c.power;
  const double cross = sq(c.g23 * c.g14 - c.g24 * c.g13) * p * p;
  return awgn_capacity((sq(c.g13) * p * q.w + sq(c.g14) * p + cross * q.w) /
                       (1.0 + sq(c.g23) * p * q.w + sq(c.g24) * p));
}

double cf_user2(const IrcConfig& c, const Quantisation& q) {
  const double p = c.power;
  const double cross = sq(c.g13 * c.g25 - c.g15 * c.g23) * p * p;
  return awgn_capacity((sq(c.g23) * p * q.w + sq(c.g25) * p + cross * q.w) /
                       (1.0 + sq(c.g13) * p * q.w + sq(c.g15) * p));
}

double hf_user1(const IrcConfig& c, const Quantisation& q) {
  const double p = c.power;
  return awgn_capacity(sq(c.g14) * p / (sq(c.g24) * p + 1.0)) + c.relay_rate -
         awgn_capacity(((sq(c.g23) + sq(c.g24)) * p + 1.0) / (sq(c.g24) * p + 1.0) * q.inv);
}

double hf_user2(const IrcConfig& c, const Quantisation& q) {
  const double p = c.power;
  return awgn_capacity(sq(c.g25) * p / (sq(c.g15) * p + 1.0)) + c.relay_rate -
         awgn_capacity(((sq(c.g13) + sq(c.g15)) * p + 1.0) / (sq(c.g15) * p + 1.0) * q.inv);
}

// Shared factor of the CF and HF sigma^2 limits.
std::pair<double, double> feasibility_terms(const IrcConfig& c) {
  const double p = c.power;
  const double a1 = (sq(c.g13) + sq(c.g14)) * p + (sq(c.g23) + sq(c.g24)) * p + 1.0;
  const double a2 = (sq(c.g13) + sq(c.g15)) * p + (sq(c.g23) + sq(c.g25)) * p + 1.0;
  const double t1 = (sq(c.g13 * c.g24 - c.g23 * c.g14) * p * p + a1) /
                    (sq(c.g14) * p + sq(c.g24) * p + 1.0);
  const double t2 = (sq(c.g13 * c.g25 - c.g23 * c.g15) * p * p + a2) /
                    (sq(c.g15) * p + sq(c.g25) * p + 1.0);
  return {t1, t2};
}

double relay_scale(const IrcConfig& c) {
  const double denom = std::exp2(2.0 * c.relay_rate) - 1.0;
  return denom > 0.0 ? 1.0 / denom : kInf;
}

}  // namespace

IrcConfig IrcConfig::figure_gains(double power, double relay_rate, bool alternate) {
  IrcConfig c;
  c.g14 = c.g25 = 1.0;
  c.g15 = c.g24 = 0.5;
  c.g13 = alternate ? 0.5 : 0.1;
  c.g23 = alternate ? 0.1 : 0.5;
  c.power = power;
  c.relay_rate = relay_rate;
  return c;
}

void IrcConfig::validate() const {
  for (double g : {g13, g23, g14, g24, g15, g25}) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw UsageError("channel gains must be finite and >= 0");
  }
  if (!(relay_rate >= 0.0) || !std::isfinite(relay_rate)) throw UsageError("relay rate must be >= 0");
  if (!(power >= 0.0) || !std::isfinite(power)) throw UsageError("power must be >= 0");
}

double irc_cf_sigma2_min(const IrcConfig& cfg) {
  cfg.validate();
  const auto [t1, t2] = feasibility_terms(cfg);
  return relay_scale(cfg) * std::max(t1, t2);
}

double irc_hf_sigma2_max(const IrcConfig& cfg) {
  cfg.validate();
  const auto [t1, t2] = feasibility_terms(cfg);
  return relay_scale(cfg) * std::min(t1, t2);
}

IrcRates irc_rates_at(const IrcConfig& cfg, IrcScheme scheme, double sigma2) {
  cfg.validate();
  if (!(sigma2 > 0.0)) throw UsageError("quantisation noise variance must be > 0");
  const Quantisation q(sigma2);
  const double p = cfg.power;
  const double r0 = cfg.relay_rate;

  IrcRates out;
  out.sigma2 = sigma2;
  RateRegion region(5);
  auto add = [&](const char* name, NodeSet set, double value) {
    out.constraints.push_back({name, std::max(value, 0.0)});
    region.add_constraint(set, value);
  };
  const NodeSet user1 = NodeSet::single(1);
  const NodeSet user2 = NodeSet::single(2);
  const NodeSet both = NodeSet::of({1, 2});

  switch (scheme) {
    case IrcScheme::kNncDecodeAll: {
      const double relay_penalty = r0 - awgn_capacity(q.inv);
      add("R1_relay", user1, awgn_capacity(sq(cfg.g14) * p) + relay_penalty);
      add("R1_direct", user1, awgn_capacity((sq(cfg.g13) * q.w + sq(cfg.g14)) * p));
      add("R2_relay", user2, awgn_capacity(sq(cfg.g25) * p) + relay_penalty);
      add("R2_direct", user2, awgn_capacity((sq(cfg.g23) * q.w + sq(cfg.g25)) * p));
      add("sum4_relay", both, awgn_capacity((sq(cfg.g14) + sq(cfg.g24)) * p) + relay_penalty);
      add("sum4_direct", both,
          awgn_capacity((sq(cfg.g13) + sq(cfg.g23)) * p * q.w + (sq(cfg.g14) + sq(cfg.g24)) * p +
                        sq(cfg.g13 * cfg.g24 - cfg.g23 * cfg.g14) * p * p * q.w));
      add("sum5_relay", both, awgn_capacity((sq(cfg.g15) + sq(cfg.g25)) * p) + relay_penalty);
      add("sum5_direct", both,
          awgn_capacity((sq(cfg.g13) + sq(cfg.g23)) * p * q.w + (sq(cfg.g25) + sq(cfg.g15)) * p +
                        sq(cfg.g23 * cfg.g15 - cfg.g13 * cfg.g25) * p * p * q.w));
      break;
    }
    case IrcScheme::kNncTreatNoise:
      add("R1_hash", user1, hf_user1(cfg, q));
      add("R1_compress", user1, cf_user1(cfg, q));
      add("R2_hash", user2, hf_user2(cfg, q));
      add("R2_compress", user2, cf_user2(cfg, q));
      break;
    case IrcScheme::kCompressForward:
      add("R1", user1, cf_user1(cfg, q));
      add("R2", user2, cf_user2(cfg, q));
      break;
    case IrcScheme::kHashForward:
      add("R1", user1, hf_user1(cfg, q));
      add("R2", user2, hf_user2(cfg, q));
      break;
  }

  const std::vector<double> weights{1.0, 1.0, 0.0, 0.0, 0.0};
  const auto best = max_weighted_sum(region, weights, both);
  if (best.unbounded) throw NumericalError("interference relay region is unbounded");
  out.sum = best.value;
  out.r1 = best.rates[0];
  out.r2 = best.rates[1];
  return out;
}

IrcRates irc_rates(const IrcConfig& cfg, IrcScheme scheme, const SweepGrid& grid) {
  cfg.validate();
  grid.validate();
  auto sum_at = [&](double s) { return irc_rates_at(cfg, scheme, s).sum; };

  SweepGrid g = grid;
  switch (scheme) {
    case IrcScheme::kCompressForward: {
      const double lo = irc_cf_sigma2_min(cfg);
      if (std::isinf(lo)) {
        IrcRates out = irc_rates_at(cfg, scheme, kInf);
        out.flagged = true;
        return out;
      }
      g.lower = std::max(lo, std::numeric_limits<double>::min());
      g.upper = std::max(grid.upper, 10.0 * g.lower);
      break;
    }
    case IrcScheme::kHashForward: {
      const double hi = irc_hf_sigma2_max(cfg);
      if (!std::isinf(hi)) {
        if (!(hi > 0.0)) {
          IrcRates out = irc_rates_at(cfg, scheme, std::numeric_limits<double>::min());
          out.flagged = true;
          return out;
        }
        g.upper = hi;
        g.lower = std::min(grid.lower, hi / 10.0);
      }
      break;
    }
    case IrcScheme::kNncDecodeAll:
    case IrcScheme::kNncTreatNoise:
      break;
  }

  ScalarOptimum opt = scalar_maximize(sum_at, g);
  if (scheme == IrcScheme::kNncTreatNoise || scheme == IrcScheme::kNncDecodeAll) {
    // The CF/HF feasibility limits are where the two families of caps
    // cross; test them explicitly.
    for (double s : {irc_cf_sigma2_min(cfg), irc_hf_sigma2_max(cfg)}) {
      if (std::isfinite(s) && s > 0.0) {
        const double v = sum_at(s);
        if (v > opt.value) opt = {s, v};
      }
    }
  }
  return irc_rates_at(cfg, scheme, opt.argmax);
}

}  // namespace nnc

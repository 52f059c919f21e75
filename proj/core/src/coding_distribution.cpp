#include "nnc/coding_distribution.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "nnc/error.hpp"

namespace nnc {

namespace {

void check_pmf(std::span<const double> row, const std::string& what) {
  double sum = 0.0;
  for (double p : row) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError(what + " has an entry outside [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw UsageError(what + " sums to " + std::to_string(sum));
  }
}

std::string node_tag(const char* table, int k, int q) {
  return std::string(table) + " of node " + std::to_string(k) + " (q=" + std::to_string(q) + ")";
}

}  // namespace

CodingDistribution CodingDistribution::uniform_identity(const DmNetwork& net) {
  CodingDistribution d;
  const int n = net.n_nodes();
  d.inputs.resize(static_cast<std::size_t>(n));
  d.compression.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int xs = net.x_sizes()[static_cast<std::size_t>(k)];
    const int ys = net.y_sizes()[static_cast<std::size_t>(k)];
    d.inputs[k] = {std::vector<double>(static_cast<std::size_t>(xs), 1.0 / xs)};
    std::vector<double> table(static_cast<std::size_t>(xs) * ys * ys, 0.0);
    for (int x = 0; x < xs; ++x) {
      for (int y = 0; y < ys; ++y) table[(static_cast<std::size_t>(x) * ys + y) * ys + y] = 1.0;
    }
    d.compression[k] = {std::move(table)};
    d.yhat_sizes.push_back(ys);
  }
  return d;
}

CodingDistribution CodingDistribution::uniform_silent(const DmNetwork& net) {
  CodingDistribution d = uniform_identity(net);
  for (int k = 0; k < net.n_nodes(); ++k) {
    const auto rows = static_cast<std::size_t>(net.x_sizes()[k]) * net.y_sizes()[k];
    d.compression[k] = {std::vector<double>(rows, 1.0)};
    d.yhat_sizes[k] = 1;
  }
  return d;
}

void CodingDistribution::validate(const DmNetwork& net) const {
  const auto n = static_cast<std::size_t>(net.n_nodes());
  check_pmf(time_sharing, "time-sharing pmf");
  const auto nq = time_sharing.size();
  if (inputs.size() != n || compression.size() != n || yhat_sizes.size() != n) {
    throw UsageError("coding distribution must describe every node");
  }
  const bool sup = mode() == CodingMode::kSuperposition;
  if (sup && aux_sizes.size() != n) throw UsageError("superposition needs |U_k| for every node");
  for (std::size_t k = 0; k < n; ++k) {
    const int node = static_cast<int>(k) + 1;
    const int xs = net.x_sizes()[k];
    const int ys = net.y_sizes()[k];
    const int zs = yhat_sizes[k];
    const int us = sup ? aux_sizes[k] : 1;
    if (zs < 1 || us < 1) throw UsageError("alphabet sizes must be at least 1");
    if (inputs[k].size() != nq || compression[k].size() != nq) {
      throw UsageError("node " + std::to_string(node) + " needs one table per time-sharing value");
    }
    const int cond = sup ? us : xs;
    for (std::size_t q = 0; q < nq; ++q) {
      const auto& in = inputs[k][q];
      if (in.size() != static_cast<std::size_t>(us) * xs) {
        throw UsageError(node_tag("input pmf", node, static_cast<int>(q)) + " has the wrong size");
      }
      check_pmf(in, node_tag("input pmf", node, static_cast<int>(q)));
      const auto& comp = compression[k][q];
      if (comp.size() != static_cast<std::size_t>(cond) * ys * zs) {
        throw UsageError(node_tag("compression table", node, static_cast<int>(q)) +
                         " has the wrong size");
      }
      for (int r = 0; r < cond * ys; ++r) {
        check_pmf(std::span<const double>(comp).subspan(static_cast<std::size_t>(r) * zs,
                                                        static_cast<std::size_t>(zs)),
                  node_tag("compression table", node, static_cast<int>(q)) + " row " +
                      std::to_string(r));
      }
    }
  }
}

std::vector<double> CodingDistribution::input_law(const DmNetwork& net) const {
  validate(net);
  const int n = net.n_nodes();
  const bool sup = mode() == CodingMode::kSuperposition;
  std::vector<double> law(net.input_count(), 0.0);
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  for (std::size_t q = 0; q < time_sharing.size(); ++q) {
    for (std::uint64_t idx = 0; idx < net.input_count(); ++idx) {
      // digits of idx, x_1 most significant
      std::uint64_t rest = idx;
      for (int k = n; k-- > 0;) {
        digit[k] = static_cast<int>(rest % static_cast<std::uint64_t>(net.x_sizes()[k]));
        rest /= static_cast<std::uint64_t>(net.x_sizes()[k]);
      }
      double p = time_sharing[q];
      for (int k = 0; k < n && p > 0.0; ++k) {
        const int xs = net.x_sizes()[k];
        if (sup) {
          double marg = 0.0;
          for (int u = 0; u < aux_sizes[k]; ++u) marg += inputs[k][q][u * xs + digit[k]];
          p *= marg;
        } else {
          p *= inputs[k][q][digit[k]];
        }
      }
      law[idx] += p;
    }
  }
  return law;
}

VariableMap::VariableMap(int n_nodes, bool with_aux)
    : n_(n_nodes), with_aux_(with_aux), base_x_(1 + (with_aux ? n_nodes : 0)) {}

int VariableMap::u(int k) const {
  if (!with_aux_) throw UsageError("joint has no auxiliary variables");
  return 1 + k - 1;
}

namespace {

template <typename Fn>
VarList collect(NodeSet s, Fn&& index) {
  VarList out;
  for (int k : s.members()) out.push_back(index(k));
  return out;
}

}  // namespace

VarList VariableMap::us(NodeSet s) const { return collect(s, [this](int k) { return u(k); }); }
VarList VariableMap::xs(NodeSet s) const { return collect(s, [this](int k) { return x(k); }); }
VarList VariableMap::ys(NodeSet s) const { return collect(s, [this](int k) { return y(k); }); }
VarList VariableMap::yhats(NodeSet s) const {
  return collect(s, [this](int k) { return yhat(k); });
}

VarList join(std::initializer_list<VarList> parts) {
  VarList out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

NetworkJoint assemble_joint(const DmNetwork& net, const CodingDistribution& dist,
                            CodingMode mode) {
  if (dist.mode() != mode) {
    throw UsageError(mode == CodingMode::kPlain
                         ? "plain evaluation given a superposition coding distribution"
                         : "superposition evaluation needs auxiliary alphabets");
  }
  dist.validate(net);
  const int n = net.n_nodes();
  const bool sup = mode == CodingMode::kSuperposition;
  const auto un = static_cast<std::size_t>(n);

  std::vector<std::string> labels{"Q"};
  std::vector<int> cards{dist.q_size()};
  if (sup) {
    for (int k = 1; k <= n; ++k) {
      labels.push_back("U" + std::to_string(k));
      cards.push_back(dist.aux_sizes[k - 1]);
    }
  }
  for (int k = 1; k <= n; ++k) {
    labels.push_back("X" + std::to_string(k));
    cards.push_back(net.x_sizes()[k - 1]);
  }
  for (int k = 1; k <= n; ++k) {
    labels.push_back("Y" + std::to_string(k));
    cards.push_back(net.y_sizes()[k - 1]);
  }
  for (int k = 1; k <= n; ++k) {
    labels.push_back("Yhat" + std::to_string(k));
    cards.push_back(dist.yhat_sizes[k - 1]);
  }
  const std::uint64_t states = state_count(cards);
  VariableMap vars(n, sup);

  std::vector<std::uint64_t> stride(cards.size());
  {
    std::uint64_t s = 1;
    for (std::size_t i = cards.size(); i-- > 0;) {
      stride[i] = s;
      s *= static_cast<std::uint64_t>(cards[i]);
    }
  }

  // Output digits for every y^N.
  const std::uint64_t outputs = net.output_count();
  std::vector<int> ydigits(outputs * un);
  for (std::uint64_t yi = 0; yi < outputs; ++yi) {
    std::uint64_t rest = yi;
    for (std::size_t k = un; k-- > 0;) {
      ydigits[yi * un + k] = static_cast<int>(rest % static_cast<std::uint64_t>(net.y_sizes()[k]));
      rest /= static_cast<std::uint64_t>(net.y_sizes()[k]);
    }
  }

  std::vector<double> probs(states, 0.0);
  std::vector<int> ux(un, 0);  // per-node (u,x) pair index
  std::vector<int> xdig(un, 0), udig(un, 0);
  std::vector<int> pair_size(un);
  for (std::size_t k = 0; k < un; ++k) {
    pair_size[k] = (sup ? dist.aux_sizes[k] : 1) * net.x_sizes()[k];
  }

  for (int q = 0; q < dist.q_size(); ++q) {
    const double pq = dist.time_sharing[static_cast<std::size_t>(q)];
    if (pq == 0.0) continue;
    std::fill(ux.begin(), ux.end(), 0);
    while (true) {
      double px = pq;
      std::uint64_t x_index = 0;
      std::uint64_t base = static_cast<std::uint64_t>(q) * stride[0];
      for (std::size_t k = 0; k < un; ++k) {
        const int xs = net.x_sizes()[k];
        xdig[k] = ux[k] % xs;
        udig[k] = ux[k] / xs;
        px *= dist.inputs[k][static_cast<std::size_t>(q)][static_cast<std::size_t>(ux[k])];
        x_index = x_index * static_cast<std::uint64_t>(xs) + static_cast<std::uint64_t>(xdig[k]);
        base += static_cast<std::uint64_t>(xdig[k]) * stride[static_cast<std::size_t>(vars.x(static_cast<int>(k) + 1))];
        if (sup) base += static_cast<std::uint64_t>(udig[k]) * stride[static_cast<std::size_t>(vars.u(static_cast<int>(k) + 1))];
      }
      if (px > 0.0) {
        const auto row = net.channel_row(x_index);
        for (std::uint64_t yi = 0; yi < outputs; ++yi) {
          const double py = row[yi];
          if (py == 0.0) continue;
          std::uint64_t yb = base;
          for (std::size_t k = 0; k < un; ++k) {
            yb += static_cast<std::uint64_t>(ydigits[yi * un + k]) *
                  stride[static_cast<std::size_t>(vars.y(static_cast<int>(k) + 1))];
          }
          // Compression layer, node by node.
          std::function<void(std::size_t, double, std::uint64_t)> spread =
              [&](std::size_t k, double p, std::uint64_t index) {
                if (k == un) {
                  probs[index] += p;
                  return;
                }
                const int ys = net.y_sizes()[k];
                const int zs = dist.yhat_sizes[k];
                const int c = sup ? udig[k] : xdig[k];
                const auto& table = dist.compression[k][static_cast<std::size_t>(q)];
                const std::size_t row0 =
                    (static_cast<std::size_t>(c) * ys + static_cast<std::size_t>(ydigits[yi * un + k])) * zs;
                const std::uint64_t zstride = stride[static_cast<std::size_t>(vars.yhat(static_cast<int>(k) + 1))];
                for (int z = 0; z < zs; ++z) {
                  const double pz = table[row0 + static_cast<std::size_t>(z)];
                  if (pz == 0.0) continue;
                  spread(k + 1, p * pz, index + static_cast<std::uint64_t>(z) * zstride);
                }
              };
          spread(0, px * py, yb);
        }
      }
      // advance the (u,x) odometer, last node fastest
      std::size_t k = un;
      while (k-- > 0) {
        if (++ux[k] < pair_size[k]) break;
        ux[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  return {JointDistribution(std::move(labels), std::move(cards), std::move(probs)), vars};
}

}  // namespace nnc

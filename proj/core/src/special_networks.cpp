#include "nnc/special_networks.hpp"

#include <cmath>
#include <string>

#include "nnc/error.hpp"

namespace nnc {

namespace {

void check_node_count(int n) {
  if (n < 2 || n > kMaxNodes) throw SizeError("networks hold 2 to 16 nodes");
}

std::vector<int> digits_of(std::uint64_t index, const std::vector<int>& radices) {
  std::vector<int> out(radices.size());
  for (std::size_t k = radices.size(); k-- > 0;) {
    out[k] = static_cast<int>(index % static_cast<std::uint64_t>(radices[k]));
    index /= static_cast<std::uint64_t>(radices[k]);
  }
  return out;
}

std::uint64_t index_of(const std::vector<int>& digits, const std::vector<int>& radices) {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < radices.size(); ++k) {
    index = index * static_cast<std::uint64_t>(radices[k]) + static_cast<std::uint64_t>(digits[k]);
  }
  return index;
}

}  // namespace

NoiselessNetwork::NoiselessNetwork(int n_nodes, std::vector<NoiselessEdge> edges)
    : n_(n_nodes), edges_(std::move(edges)) {
  check_node_count(n_);
  for (const auto& e : edges_) {
    if (e.from < 1 || e.from > n_ || e.to < 1 || e.to > n_) {
      throw UsageError("edge endpoint outside [1:" + std::to_string(n_) + "]");
    }
    if (e.from == e.to) throw UsageError("noiseless networks have no self-loops");
    if (!(e.capacity >= 0.0) || !std::isfinite(e.capacity)) {
      throw UsageError("edge capacities must be finite and nonnegative");
    }
  }
}

double NoiselessNetwork::cut_capacity(NodeSet cut) const {
  double total = 0.0;
  for (const auto& e : edges_) {
    if (cut.contains(e.from) && !cut.contains(e.to)) total += e.capacity;
  }
  return total;
}

DmNetwork NoiselessNetwork::to_dm_network(const std::vector<NodeSet>& destinations) const {
  // Edge e carries a symbol from an alphabet of size 2^C_e.
  std::vector<int> edge_size;
  for (const auto& e : edges_) {
    const double c = e.capacity;
    if (c != std::floor(c) || c > 16) {
      throw UsageError("DM conversion needs integer edge capacities up to 16 bits");
    }
    edge_size.push_back(1 << static_cast<int>(c));
  }
  const auto un = static_cast<std::size_t>(n_);
  std::vector<std::vector<std::size_t>> out_edges(un), in_edges(un);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_edges[static_cast<std::size_t>(edges_[i].from - 1)].push_back(i);
    in_edges[static_cast<std::size_t>(edges_[i].to - 1)].push_back(i);
  }
  std::vector<int> x_sizes(un, 1), y_sizes(un, 1);
  for (std::size_t k = 0; k < un; ++k) {
    for (auto i : out_edges[k]) x_sizes[k] *= edge_size[i];
    for (auto i : in_edges[k]) y_sizes[k] *= edge_size[i];
  }
  const std::uint64_t inputs = state_count(x_sizes);
  const std::uint64_t outputs = state_count(y_sizes);
  if (inputs * outputs > kMaxStates) throw SizeError("converted network exceeds 2^24 states");

  std::vector<double> channel(inputs * outputs, 0.0);
  std::vector<int> symbol(edges_.size());
  for (std::uint64_t xi = 0; xi < inputs; ++xi) {
    const auto xd = digits_of(xi, x_sizes);
    // Unpack each node's input into its outgoing edge symbols (edge order,
    // last edge fastest).
    for (std::size_t k = 0; k < un; ++k) {
      int rest = xd[k];
      for (std::size_t m = out_edges[k].size(); m-- > 0;) {
        const auto e = out_edges[k][m];
        symbol[e] = rest % edge_size[e];
        rest /= edge_size[e];
      }
    }
    std::vector<int> yd(un, 0);
    for (std::size_t k = 0; k < un; ++k) {
      int value = 0;
      for (auto e : in_edges[k]) value = value * edge_size[e] + symbol[e];
      yd[k] = value;
    }
    channel[xi * outputs + index_of(yd, y_sizes)] = 1.0;
  }
  return DmNetwork(std::move(x_sizes), std::move(y_sizes), std::move(channel), destinations);
}

RateRegion noiseless_region(const NoiselessNetwork& net, NodeSet destinations) {
  RateRegion region(net.n_nodes());
  for (const auto& cut : enumerate_cutsets(net.n_nodes(), DestinationRule::multicast(destinations))) {
    region.add_constraint(cut.nodes, net.cut_capacity(cut.nodes));
  }
  return region;
}

ErasureNetwork::ErasureNetwork(std::vector<int> input_sizes) : input_sizes_(std::move(input_sizes)) {
  check_node_count(n_nodes());
  for (int s : input_sizes_) {
    if (s < 1) throw UsageError("input alphabet sizes must be at least 1");
  }
}

ErasureNetwork ErasureNetwork::independent(std::vector<int> input_sizes,
                                           const std::vector<std::vector<double>>& eps) {
  ErasureNetwork net(std::move(input_sizes));
  const int n = net.n_nodes();
  if (eps.size() != static_cast<std::size_t>(n)) throw UsageError("erasure matrix must be N x N");
  for (const auto& row : eps) {
    if (row.size() != static_cast<std::size_t>(n)) throw UsageError("erasure matrix must be N x N");
    for (double p : row) {
      if (!(p >= 0.0 && p <= 1.0)) throw UsageError("erasure probabilities must lie in [0,1]");
    }
  }
  for (int j = 1; j <= n; ++j) {
    for_each_subset(NodeSet::full(n).without(j), [&](NodeSet r) {
      double p = 1.0;
      for (int k : r.members()) p *= eps[j - 1][k - 1];
      net.set_all_erased(j, r, p);
    });
  }
  return net;
}

void ErasureNetwork::set_all_erased(int sender, NodeSet receivers, double prob) {
  if (sender < 1 || sender > n_nodes()) throw UsageError("sender outside the network");
  if (!(prob >= 0.0 && prob <= 1.0)) throw UsageError("erasure probabilities must lie in [0,1]");
  all_erased_[{sender, receivers.without(sender).mask()}] = prob;
}

double ErasureNetwork::all_erased(int sender, NodeSet receivers) const {
  const NodeSet r = receivers.without(sender);
  if (r.empty()) return 1.0;
  auto it = all_erased_.find({sender, r.mask()});
  return it == all_erased_.end() ? 1.0 : it->second;
}

RateRegion erasure_region(const ErasureNetwork& net, NodeSet destinations) {
  const int n = net.n_nodes();
  RateRegion region(n);
  for (const auto& cut : enumerate_cutsets(n, DestinationRule::multicast(destinations))) {
    const NodeSet sc = cut.nodes.complement(n);
    double v = 0.0;
    for (int j : cut.nodes.members()) {
      v += std::log2(static_cast<double>(net.input_sizes()[j - 1])) *
           (1.0 - net.all_erased(j, sc));
    }
    region.add_constraint(cut.nodes, v);
  }
  return region;
}

DeterministicNetwork::DeterministicNetwork(std::vector<int> x_sizes, std::vector<int> y_sizes,
                                           std::vector<std::vector<int>> functions)
    : x_sizes_(std::move(x_sizes)), y_sizes_(std::move(y_sizes)), functions_(std::move(functions)) {
  const int n = n_nodes();
  check_node_count(n);
  if (y_sizes_.size() != x_sizes_.size() || functions_.size() != x_sizes_.size()) {
    throw UsageError("deterministic network needs alphabets and a table for every node");
  }
  const std::uint64_t inputs = state_count(x_sizes_);
  state_count(y_sizes_);
  for (int k = 0; k < n; ++k) {
    const auto& table = functions_[static_cast<std::size_t>(k)];
    if (table.size() != inputs) {
      throw UsageError("function table of node " + std::to_string(k + 1) + " is not total");
    }
    for (int y : table) {
      if (y < 0 || y >= y_sizes_[static_cast<std::size_t>(k)]) {
        throw UsageError("function table of node " + std::to_string(k + 1) +
                         " maps outside the output alphabet");
      }
    }
  }
}

DeterministicNetwork DeterministicNetwork::gf2_linear(const std::vector<std::vector<int>>& gf2) {
  const auto n = gf2.size();
  std::vector<int> sizes(n, 2);
  const std::uint64_t inputs = std::uint64_t{1} << n;
  std::vector<std::vector<int>> functions(n, std::vector<int>(inputs, 0));
  for (std::uint64_t xi = 0; xi < inputs; ++xi) {
    const auto x = digits_of(xi, sizes);
    for (std::size_t k = 0; k < n; ++k) {
      int y = 0;
      for (std::size_t jj = 0; jj < n; ++jj) {
        if (gf2[jj].size() != n) throw UsageError("GF(2) gain matrix must be N x N");
        if (jj != k) y ^= (gf2[jj][k] & 1) & x[jj];
      }
      functions[k][xi] = y;
    }
  }
  return DeterministicNetwork(sizes, sizes, std::move(functions));
}

DmNetwork DeterministicNetwork::to_dm_network(const std::vector<NodeSet>& destinations) const {
  const std::uint64_t inputs = state_count(x_sizes_);
  const std::uint64_t outputs = state_count(y_sizes_);
  if (inputs * outputs > kMaxStates) throw SizeError("deterministic network exceeds 2^24 states");
  std::vector<double> channel(inputs * outputs, 0.0);
  std::vector<int> y(x_sizes_.size());
  for (std::uint64_t xi = 0; xi < inputs; ++xi) {
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = functions_[k][xi];
    channel[xi * outputs + index_of(y, y_sizes_)] = 1.0;
  }
  return DmNetwork(x_sizes_, y_sizes_, std::move(channel), destinations);
}

RateRegion deterministic_region(const DeterministicNetwork& net,
                                const std::vector<double>& time_sharing,
                                const std::vector<std::vector<std::vector<double>>>& inputs,
                                NodeSet destinations) {
  const int n = net.n_nodes();
  const auto un = static_cast<std::size_t>(n);
  if (inputs.size() != un) throw UsageError("need an input pmf for every node");
  const std::uint64_t nx = state_count(net.x_sizes());
  const std::uint64_t nq = time_sharing.size();

  // Joint over (Q, X^N, Y^N) is supported on (q, x) pairs only, so the
  // conditional entropy is accumulated from the lookup tables directly:
  // H(Y(S^c) | X(S^c), Q) = H(Y(S^c), X(S^c), Q) - H(X(S^c), Q).
  std::vector<double> pqx(nq * nx, 0.0);
  double total = 0.0;
  for (std::uint64_t q = 0; q < nq; ++q) {
    if (inputs[0].size() != nq) throw UsageError("input pmfs need one row per time-sharing value");
    for (std::uint64_t xi = 0; xi < nx; ++xi) {
      const auto x = digits_of(xi, net.x_sizes());
      double p = time_sharing[q];
      for (std::size_t k = 0; k < un; ++k) {
        const auto& row = inputs[k].at(q);
        if (row.size() != static_cast<std::size_t>(net.x_sizes()[k])) {
          throw UsageError("input pmf of node " + std::to_string(k + 1) + " has the wrong size");
        }
        p *= row[static_cast<std::size_t>(x[k])];
      }
      pqx[q * nx + xi] = p;
      total += p;
    }
  }
  if (std::abs(total - 1.0) > 1e-10) throw UsageError("input pmfs do not normalise");

  auto entropy_of = [&](NodeSet xs_set, NodeSet ys_set) {
    std::map<std::vector<int>, double> marg;
    for (std::uint64_t q = 0; q < nq; ++q) {
      for (std::uint64_t xi = 0; xi < nx; ++xi) {
        const double p = pqx[q * nx + xi];
        if (p == 0.0) continue;
        const auto x = digits_of(xi, net.x_sizes());
        std::vector<int> key{static_cast<int>(q)};
        for (int k : xs_set.members()) key.push_back(x[static_cast<std::size_t>(k - 1)]);
        for (int k : ys_set.members()) key.push_back(net.functions()[static_cast<std::size_t>(k - 1)][xi]);
        marg[key] += p;
      }
    }
    double h = 0.0;
    for (const auto& [key, p] : marg) {
      if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
  };

  RateRegion region(n);
  for (const auto& cut : enumerate_cutsets(n, DestinationRule::multicast(destinations))) {
    const NodeSet sc = cut.nodes.complement(n);
    region.add_constraint(cut.nodes, entropy_of(sc, sc) - entropy_of(sc, NodeSet()));
  }
  return region;
}

}  // namespace nnc

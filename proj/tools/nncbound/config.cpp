#include "config.hpp"

#include <cmath>
#include <fstream>
#include <span>
#include <sstream>

#include "nnc/error.hpp"

namespace nnc::cli {

using nlohmann::json;

std::string to_string(NetworkKind kind) {
  switch (kind) {
    case NetworkKind::kGaussian: return "gaussian";
    case NetworkKind::kDm: return "dm";
    case NetworkKind::kNoiseless: return "noiseless";
    case NetworkKind::kErasure: return "erasure";
    case NetworkKind::kDeterministic: return "deterministic";
  }
  return "unknown";
}

NodeSet NetworkConfig::all_destinations() const {
  NodeSet out;
  for (NodeSet d : destinations) out = out | d;
  return out;
}

NodeSet NetworkConfig::sources() const {
  NodeSet out;
  for (int k = 1; k <= n_nodes; ++k) {
    if (!destinations[static_cast<std::size_t>(k - 1)].empty()) out = out.with(k);
  }
  return out.empty() ? NodeSet::full(n_nodes) : out;
}

DmNetwork NetworkConfig::as_dm() const {
  if (const auto* dm = std::get_if<DmNetwork>(&network)) return *dm;
  if (const auto* nl = std::get_if<NoiselessNetwork>(&network)) return nl->to_dm_network(destinations);
  if (const auto* det = std::get_if<DeterministicNetwork>(&network)) {
    return det->to_dm_network(destinations);
  }
  throw SchemaError("a " + to_string(kind) + " network has no discrete memoryless form");
}

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw SchemaError(std::string("missing required field \"") + key + "\"");
  }
  return doc.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw SchemaError(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw SchemaError(where + " must be finite");
  return x;
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where + " must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + " must be an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(integer(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Depth-first flattening of nested numeric arrays (last index fastest).
void flatten_into(const json& v, const std::string& where, std::vector<double>& out) {
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      flatten_into(v[i], where + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out.push_back(number(v, where));
}

std::vector<double> flatten(const json& v, const std::string& where) {
  std::vector<double> out;
  flatten_into(v, where, out);
  return out;
}

std::vector<std::vector<double>> matrix(const json& v, const std::string& where, std::size_t n) {
  if (!v.is_array() || v.size() != n) {
    throw SchemaError(where + " must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != n) {
      throw SchemaError(row_where + " must hold " + std::to_string(n) + " numbers");
    }
    out.push_back(flatten(v[i], row_where));
  }
  return out;
}

NodeSet node_set(const json& v, int n, const std::string& where) {
  const auto nodes = int_list(v, where);
  for (int k : nodes) {
    if (k < 1 || k > n) throw SchemaError(where + " names node " + std::to_string(k));
  }
  return NodeSet::of(nodes);
}

// Checks a pmf row within 1e-9 and renormalises it.
void normalise_row(std::span<double> row, const std::string& where) {
  double sum = 0.0;
  for (double p : row) {
    if (p < 0.0) throw SchemaError(where + " has a negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg.precision(17);
    msg << where << " sums to " << sum << ", not 1";
    throw SchemaError(msg.str());
  }
  for (double& p : row) p /= sum;
}

void normalise_rows(std::vector<double>& flat, std::size_t row_size, const std::string& where) {
  if (row_size == 0 || flat.size() % row_size != 0) {
    throw SchemaError(where + " has " + std::to_string(flat.size()) +
                      " entries, not a multiple of the row size " + std::to_string(row_size));
  }
  for (std::size_t r = 0; r < flat.size() / row_size; ++r) {
    normalise_row(std::span<double>(flat).subspan(r * row_size, row_size),
                  where + " row " + std::to_string(r));
  }
}

std::vector<NodeSet> parse_destinations(const json& doc, int n) {
  std::vector<NodeSet> dests(static_cast<std::size_t>(n));
  if (doc.contains("multicast")) {
    const NodeSet d = node_set(doc.at("multicast"), n, "multicast");
    for (auto& s : dests) s = d;
    return dests;
  }
  const json& v = require(doc, "destinations");
  if (!v.is_array() || v.size() != static_cast<std::size_t>(n)) {
    throw SchemaError("destinations must list one set per node");
  }
  for (int k = 0; k < n; ++k) {
    dests[static_cast<std::size_t>(k)] =
        node_set(v[static_cast<std::size_t>(k)], n, "destinations[" + std::to_string(k) + "]");
  }
  return dests;
}

}  // namespace

NetworkConfig parse_network(const json& doc) {
  NetworkConfig cfg;
  const json& kind = require(doc, "kind");
  if (!kind.is_string()) throw SchemaError("kind must be a string");
  const std::string k = kind.get<std::string>();
  const int n = integer(require(doc, "nodes"), "nodes");
  if (n < 2 || n > kMaxNodes) throw SchemaError("nodes must lie in [2:16]");
  cfg.n_nodes = n;
  cfg.destinations = parse_destinations(doc, n);
  const auto un = static_cast<std::size_t>(n);

  try {
    if (k == "gaussian") {
      cfg.kind = NetworkKind::kGaussian;
      const auto g = matrix(require(doc, "gains"), "gains", un);
      Eigen::MatrixXd gains(n, n);
      for (int j = 0; j < n; ++j) {
        for (int r = 0; r < n; ++r) gains(j, r) = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
      }
      cfg.network = GaussianNetwork(gains, number(require(doc, "power"), "power"), cfg.destinations);
    } else if (k == "dm") {
      cfg.kind = NetworkKind::kDm;
      auto xs = int_list(require(doc, "x_sizes"), "x_sizes");
      auto ys = int_list(require(doc, "y_sizes"), "y_sizes");
      if (xs.size() != un || ys.size() != un) throw SchemaError("alphabet lists need one entry per node");
      std::uint64_t outputs = state_count(ys);
      auto channel = flatten(require(doc, "channel"), "channel");
      normalise_rows(channel, outputs, "channel");
      cfg.network = DmNetwork(std::move(xs), std::move(ys), std::move(channel), cfg.destinations);
    } else if (k == "noiseless") {
      cfg.kind = NetworkKind::kNoiseless;
      const json& edges = require(doc, "edges");
      if (!edges.is_array()) throw SchemaError("edges must be an array");
      std::vector<NoiselessEdge> list;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (e.is_array() && e.size() == 3) {
          list.push_back({integer(e[0], where + "[0]"), integer(e[1], where + "[1]"),
                          number(e[2], where + "[2]")});
        } else if (e.is_object()) {
          list.push_back({integer(require(e, "from"), where + ".from"),
                          integer(require(e, "to"), where + ".to"),
                          number(require(e, "capacity"), where + ".capacity")});
        } else {
          throw SchemaError(where + " must be [from, to, capacity] or an object");
        }
      }
      cfg.network = NoiselessNetwork(n, std::move(list));
    } else if (k == "erasure") {
      cfg.kind = NetworkKind::kErasure;
      auto sizes = int_list(require(doc, "input_sizes"), "input_sizes");
      if (sizes.size() != un) throw SchemaError("input_sizes needs one entry per node");
      std::vector<std::vector<double>> eps(un, std::vector<double>(un, 1.0));
      if (doc.contains("erasure")) eps = matrix(doc.at("erasure"), "erasure", un);
      auto net = ErasureNetwork::independent(std::move(sizes), eps);
      if (doc.contains("all_erased")) {
        const json& list = doc.at("all_erased");
        if (!list.is_array()) throw SchemaError("all_erased must be an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
          const std::string where = "all_erased[" + std::to_string(i) + "]";
          net.set_all_erased(integer(require(list[i], "sender"), where + ".sender"),
                             node_set(require(list[i], "receivers"), n, where + ".receivers"),
                             number(require(list[i], "prob"), where + ".prob"));
        }
      }
      cfg.network = std::move(net);
    } else if (k == "deterministic") {
      cfg.kind = NetworkKind::kDeterministic;
      if (doc.contains("gf2")) {
        std::vector<std::vector<int>> g(un);
        const auto m = matrix(doc.at("gf2"), "gf2", un);
        for (std::size_t j = 0; j < un; ++j) {
          for (double v : m[j]) {
            if (v != 0.0 && v != 1.0) throw SchemaError("gf2 entries must be 0 or 1");
            g[j].push_back(static_cast<int>(v));
          }
        }
        cfg.network = DeterministicNetwork::gf2_linear(g);
      } else {
        auto xs = int_list(require(doc, "x_sizes"), "x_sizes");
        auto ys = int_list(require(doc, "y_sizes"), "y_sizes");
        const json& fns = require(doc, "functions");
        if (!fns.is_array() || fns.size() != un) throw SchemaError("functions needs one table per node");
        std::vector<std::vector<int>> tables;
        for (std::size_t i = 0; i < un; ++i) {
          tables.push_back(int_list(fns[i], "functions[" + std::to_string(i) + "]"));
        }
        cfg.network = DeterministicNetwork(std::move(xs), std::move(ys), std::move(tables));
      }
    } else {
      throw SchemaError("unknown network kind \"" + k + "\"");
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const UsageError& e) {
    throw SchemaError(std::string("invalid ") + k + " network: " + e.what());
  }
  return cfg;
}

NetworkConfig load_network(const std::string& path) { return parse_network(read_json_file(path)); }

DistributionConfig parse_distribution(const json& doc, const DmNetwork& net) {
  DistributionConfig out;
  const auto un = static_cast<std::size_t>(net.n_nodes());
  if (doc.contains("preset")) {
    const std::string preset = doc.at("preset").get<std::string>();
    if (preset == "uniform_identity") {
      out.coding = CodingDistribution::uniform_identity(net);
    } else if (preset == "uniform_silent") {
      out.coding = CodingDistribution::uniform_silent(net);
    } else {
      throw SchemaError("unknown distribution preset \"" + preset + "\"");
    }
  } else {
    CodingDistribution& d = out.coding;
    d.time_sharing = flatten(require(doc, "time_sharing"), "time_sharing");
    normalise_row(d.time_sharing, "time_sharing");
    const std::size_t nq = d.time_sharing.size();
    if (doc.contains("aux_sizes")) {
      d.aux_sizes = int_list(doc.at("aux_sizes"), "aux_sizes");
      if (d.aux_sizes.size() != un) throw SchemaError("aux_sizes needs one entry per node");
    }
    d.yhat_sizes = doc.contains("yhat_sizes") ? int_list(doc.at("yhat_sizes"), "yhat_sizes")
                                              : net.y_sizes();
    if (d.yhat_sizes.size() != un) throw SchemaError("yhat_sizes needs one entry per node");
    const json& inputs = require(doc, "inputs");
    const json& comp = require(doc, "compression");
    if (!inputs.is_array() || inputs.size() != un || !comp.is_array() || comp.size() != un) {
      throw SchemaError("inputs and compression need one entry per node");
    }
    d.inputs.resize(un);
    d.compression.resize(un);
    for (std::size_t k = 0; k < un; ++k) {
      const std::string node = std::to_string(k + 1);
      if (!inputs[k].is_array() || inputs[k].size() != nq || !comp[k].is_array() ||
          comp[k].size() != nq) {
        throw SchemaError("node " + node + " needs one input and compression table per q");
      }
      const std::size_t in_size =
          static_cast<std::size_t>(d.aux_sizes.empty() ? 1 : d.aux_sizes[k]) *
          static_cast<std::size_t>(net.x_sizes()[k]);
      for (std::size_t q = 0; q < nq; ++q) {
        const std::string where = "inputs[" + std::to_string(k) + "][" + std::to_string(q) + "]";
        auto pmf = flatten(inputs[k][q], where);
        if (pmf.size() != in_size) throw SchemaError(where + " must have " + std::to_string(in_size) + " entries");
        normalise_row(pmf, where);
        d.inputs[k].push_back(std::move(pmf));
        const std::string cwhere = "compression[" + std::to_string(k) + "][" + std::to_string(q) + "]";
        auto table = flatten(comp[k][q], cwhere);
        normalise_rows(table, static_cast<std::size_t>(d.yhat_sizes[k]), cwhere);
        d.compression[k].push_back(std::move(table));
      }
    }
    try {
      d.validate(net);
    } catch (const UsageError& e) {
      throw SchemaError(e.what());
    }
  }
  auto read_law = [&](const json& v, const std::string& where) {
    auto law = flatten(v, where);
    if (law.size() != net.input_count()) {
      throw SchemaError(where + " must have " + std::to_string(net.input_count()) + " entries");
    }
    normalise_row(law, where);
    return law;
  };
  if (doc.contains("input_law")) out.input_laws.push_back(read_law(doc.at("input_law"), "input_law"));
  if (doc.contains("input_laws")) {
    const json& laws = doc.at("input_laws");
    if (!laws.is_array()) throw SchemaError("input_laws must be an array");
    for (std::size_t i = 0; i < laws.size(); ++i) {
      out.input_laws.push_back(read_law(laws[i], "input_laws[" + std::to_string(i) + "]"));
    }
  }
  return out;
}

DistributionConfig load_distribution(const std::string& path, const DmNetwork& net) {
  return parse_distribution(read_json_file(path), net);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

}  // namespace nnc::cli

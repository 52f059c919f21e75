#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nnc/coding_distribution.hpp"
#include "nnc/error.hpp"
#include "nnc/networks.hpp"
#include "nnc/special_networks.hpp"

namespace nnc::cli {

/// Malformed or inconsistent configuration file.
class SchemaError : public UsageError {
 public:
  using UsageError::UsageError;
};

enum class NetworkKind { kGaussian, kDm, kNoiseless, kErasure, kDeterministic };

std::string to_string(NetworkKind kind);

struct NetworkConfig {
  NetworkKind kind = NetworkKind::kDm;
  int n_nodes = 0;
  /// Per-node message destination sets.
  std::vector<NodeSet> destinations;
  std::variant<std::monostate, DmNetwork, GaussianNetwork, NoiselessNetwork, ErasureNetwork,
               DeterministicNetwork>
      network;

  NodeSet all_destinations() const;
  /// Nodes with a nonempty destination set, or every node when none has one.
  NodeSet sources() const;
  /// DM form of dm, noiseless and deterministic networks; SchemaError
  /// otherwise.
  DmNetwork as_dm() const;
};

struct DistributionConfig {
  CodingDistribution coding;
  /// Explicit input laws over X^N for the cutset bound; empty means the law
  /// induced by `coding`.
  std::vector<std::vector<double>> input_laws;
};

NetworkConfig parse_network(const nlohmann::json& doc);
NetworkConfig load_network(const std::string& path);

/// Parses a coding distribution for `net`. Every pmf row must sum to 1
/// within 1e-9; accepted rows are renormalised exactly.
DistributionConfig parse_distribution(const nlohmann::json& doc, const DmNetwork& net);
DistributionConfig load_distribution(const std::string& path, const DmNetwork& net);

nlohmann::json read_json_file(const std::string& path);

}  // namespace nnc::cli

#include "nnc/node_set.hpp"

#include "nnc/error.hpp"

namespace nnc {

namespace {

void check_node(int node) {
  if (node < 1 || node > kMaxNodes) {
    throw UsageError("node index " + std::to_string(node) + " outside [1:16]");
  }
}

}  // namespace

NodeSet NodeSet::of(std::initializer_list<int> nodes) {
  return of(std::vector<int>(nodes));
}

NodeSet NodeSet::of(const std::vector<int>& nodes) {
  std::uint16_t mask = 0;
  for (int node : nodes) {
    check_node(node);
    mask = static_cast<std::uint16_t>(mask | (1U << (node - 1)));
  }
  return NodeSet(mask);
}

NodeSet NodeSet::full(int n) {
  if (n < 0 || n > kMaxNodes) {
    throw SizeError("network size " + std::to_string(n) + " exceeds 16 nodes");
  }
  return NodeSet(static_cast<std::uint16_t>((1U << n) - 1U));
}

NodeSet NodeSet::with(int node) const {
  check_node(node);
  return NodeSet(static_cast<std::uint16_t>(mask_ | (1U << (node - 1))));
}

NodeSet NodeSet::without(int node) const {
  check_node(node);
  return NodeSet(static_cast<std::uint16_t>(mask_ & ~(1U << (node - 1))));
}

NodeSet NodeSet::complement(int n) const { return full(n) - *this; }

std::vector<int> NodeSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int k = 1; k <= kMaxNodes; ++k) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int k : members()) {
    if (!first) out += ',';
    out += std::to_string(k);
    first = false;
  }
  out += '}';
  return out;
}

DestinationRule DestinationRule::multicast(NodeSet destinations) {
  DestinationRule rule;
  rule.kind_ = Kind::kMulticast;
  rule.multicast_ = destinations;
  return rule;
}

DestinationRule DestinationRule::per_cut(std::vector<NodeSet> per_node) {
  if (per_node.size() > static_cast<std::size_t>(kMaxNodes)) {
    throw SizeError("more than 16 per-node destination sets");
  }
  DestinationRule rule;
  rule.kind_ = Kind::kPerCut;
  rule.per_node_ = std::move(per_node);
  return rule;
}

NodeSet DestinationRule::destinations_for(NodeSet cut) const {
  if (kind_ == Kind::kMulticast) return multicast_;
  NodeSet out;
  for (int k : cut.members()) {
    if (static_cast<std::size_t>(k) <= per_node_.size()) out = out | per_node_[k - 1];
  }
  return out;
}

std::vector<Cutset> enumerate_cutsets(int n, const DestinationRule& rule) {
  if (n > kMaxNodes) {
    throw SizeError("cutset enumeration supports at most 16 nodes, got " +
                    std::to_string(n));
  }
  if (n < 2) throw UsageError("cutset enumeration needs at least 2 nodes");
  const NodeSet all = NodeSet::full(n);
  std::vector<Cutset> cuts;
  for (std::uint32_t mask = 1; mask <= all.mask(); ++mask) {
    const NodeSet s(static_cast<std::uint16_t>(mask));
    const NodeSet eligible = rule.destinations_for(s) & (all - s);
    if (!eligible.empty()) cuts.push_back({s, eligible});
  }
  return cuts;
}

}  // namespace nnc

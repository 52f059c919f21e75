#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nnc {

inline constexpr int kMaxNodes = 16;

/// A subset of the network nodes [1:N], stored as a bitmask.
///
/// Nodes are numbered from 1 as in the usual cutset notation; node k
/// occupies bit k-1.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint16_t mask) : mask_(mask) {}

  static NodeSet of(std::initializer_list<int> nodes);
  static NodeSet of(const std::vector<int>& nodes);
  /// {1, ..., n}
  static NodeSet full(int n);
  static NodeSet single(int node) { return of({node}); }

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int node) const {
    return node >= 1 && node <= kMaxNodes && ((mask_ >> (node - 1)) & 1U) != 0;
  }
  constexpr bool is_subset_of(NodeSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool intersects(NodeSet other) const {
    return (mask_ & other.mask_) != 0;
  }

  NodeSet with(int node) const;
  NodeSet without(int node) const;
  /// Complement relative to the full set [1:n].
  NodeSet complement(int n) const;

  /// Members in increasing order.
  std::vector<int> members() const;
  /// "{1,3}" ; the empty set prints as "{}".
  std::string to_string() const;

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) {
    return NodeSet(static_cast<std::uint16_t>(a.mask_ | b.mask_));
  }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) {
    return NodeSet(static_cast<std::uint16_t>(a.mask_ & b.mask_));
  }
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) {
    return NodeSet(static_cast<std::uint16_t>(a.mask_ & ~b.mask_));
  }
  friend constexpr bool operator==(NodeSet, NodeSet) = default;
  friend constexpr auto operator<=>(NodeSet a, NodeSet b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  std::uint16_t mask_ = 0;
};

/// Calls fn(sub) for every subset of `set`, including the empty set and
/// `set` itself, in increasing mask order.
template <typename Fn>
void for_each_subset(NodeSet set, Fn&& fn) {
  const std::uint32_t full = set.mask();
  std::uint32_t sub = 0;
  while (true) {
    fn(NodeSet(static_cast<std::uint16_t>(sub)));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

/// How destination nodes are attached to a cutset.
///
/// Multicast: every cut is tested against the common destination set D.
/// PerCut: cut S is tested against D(S), the union of the destination sets
/// of the nodes in S.
class DestinationRule {
 public:
  enum class Kind { kMulticast, kPerCut };

  static DestinationRule multicast(NodeSet destinations);
  /// `per_node[k-1]` is the destination set of node k's message.
  static DestinationRule per_cut(std::vector<NodeSet> per_node);

  Kind kind() const { return kind_; }
  /// Destinations that cut `cut` must be evaluated against, before
  /// intersecting with the complement.
  NodeSet destinations_for(NodeSet cut) const;
  const std::vector<NodeSet>& per_node() const { return per_node_; }

 private:
  Kind kind_ = Kind::kMulticast;
  NodeSet multicast_;
  std::vector<NodeSet> per_node_;
};

struct Cutset {
  NodeSet nodes;
  /// Destinations d in the complement that the cut is evaluated against.
  NodeSet destinations;
};

/// Every nonempty S in [1:n] whose eligible destination set
/// (S^c ∩ D or S^c ∩ D(S)) is nonempty, in increasing mask order.
/// Throws SizeError for n > 16 and UsageError for n < 2.
std::vector<Cutset> enumerate_cutsets(int n, const DestinationRule& rule);

}  // namespace nnc

#include <gtest/gtest.h>

#include <map>

#include "generators.hpp"
#include "nnc/dm_bounds.hpp"
#include "nnc/error.hpp"
#include "nnc/special_networks.hpp"
#include "oracles.hpp"

using nnc::NodeSet;

namespace {

std::map<NodeSet, double> min_by_cut(const nnc::CutsetReport& rep) {
  std::map<NodeSet, double> out;
  for (const auto& e : rep.entries) {
    auto it = out.find(e.cut);
    if (it == out.end()) out[e.cut] = e.raw;
    else it->second = std::min(it->second, e.raw);
  }
  return out;
}

std::vector<std::vector<int>> submatrix(const std::vector<std::vector<int>>& g, NodeSet s, int n) {
  std::vector<std::vector<int>> rows;
  for (int j : s.members()) {
    std::vector<int> row;
    for (int k : s.complement(n).members()) {
      row.push_back(g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)]);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Noiseless, CutCapacitiesAndZeroCut) {
  nnc::NoiselessNetwork net(3, {{1, 2, 2.5}, {2, 3, 1}, {1, 3, 0}});
  EXPECT_EQ(net.cut_capacity(NodeSet::single(1)), 2.5);
  EXPECT_EQ(net.cut_capacity(NodeSet::of({1, 2})), 1.0);
  nnc::NoiselessNetwork cut_off(3, {{1, 2, 1}});
  const auto r = nnc::noiseless_region(cut_off, NodeSet::single(3));
  EXPECT_EQ(*r.bound(NodeSet::of({1, 2})), 0.0);
}

TEST(Noiseless, Validation) {
  EXPECT_THROW(nnc::NoiselessNetwork(3, {{1, 4, 1}}), nnc::UsageError);
  EXPECT_THROW(nnc::NoiselessNetwork(3, {{2, 2, 1}}), nnc::UsageError);
  EXPECT_THROW(nnc::NoiselessNetwork(3, {{1, 2, -1}}), nnc::UsageError);
  nnc::NoiselessNetwork frac(2, {{1, 2, 0.5}});
  EXPECT_THROW(frac.to_dm_network(std::vector<NodeSet>(2, NodeSet::single(2))), nnc::UsageError);
}

TEST(Noiseless, DmFormCollapsesToCutCapacities) {
  nnc_test::Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = nnc_test::pick(rng, 2, 5);
    const auto g = nnc_test::random_unit_digraph(rng, n);
    const NodeSet d = NodeSet::single(n);
    const auto dm = g.to_dm_network(std::vector<NodeSet>(static_cast<std::size_t>(n), d));
    const auto inner = min_by_cut(
        nnc::nnc_multicast_bound(dm, nnc::CodingDistribution::uniform_identity(dm), d));
    const auto region = nnc::noiseless_region(g, d);
    ASSERT_EQ(inner.size(), region.constraints().size());
    for (const auto& [s, v] : region.constraints()) {
      EXPECT_NEAR(inner.at(s), v, 1e-10) << s.to_string();
      EXPECT_EQ(v, g.cut_capacity(s));
    }
  }
}

TEST(Erasure, SingleLinkHalfBit) {
  std::vector<std::vector<double>> eps{{0, 0.5}, {1, 0}};
  const auto net = nnc::ErasureNetwork::independent({2, 2}, eps);
  EXPECT_DOUBLE_EQ(net.all_erased(1, NodeSet::single(2)), 0.5);
  const auto r = nnc::erasure_region(net, NodeSet::single(2));
  EXPECT_NEAR(*r.bound(NodeSet::single(1)), 0.5, 1e-15);
}

TEST(Erasure, IndependentLinksMultiply) {
  std::vector<std::vector<double>> eps{{0, 0.5, 0.2}, {1, 0, 1}, {1, 1, 0}};
  const auto net = nnc::ErasureNetwork::independent({4, 2, 2}, eps);
  EXPECT_NEAR(net.all_erased(1, NodeSet::of({2, 3})), 0.1, 1e-15);
  EXPECT_EQ(net.all_erased(1, NodeSet::single(1)), 1.0);  // sender excluded
  const auto r = nnc::erasure_region(net, NodeSet::single(3));
  EXPECT_NEAR(*r.bound(NodeSet::single(1)), 2 * 0.9, 1e-15);  // log2 4 * (1 - 0.1)
  EXPECT_NEAR(*r.bound(NodeSet::of({1, 2})), 2 * 0.8, 1e-15);
}

TEST(Erasure, UnsetDefaultsToNoLink) {
  nnc::ErasureNetwork net({2, 2, 2});
  EXPECT_EQ(net.all_erased(2, NodeSet::single(3)), 1.0);
  net.set_all_erased(2, NodeSet::single(3), 0.25);
  EXPECT_EQ(net.all_erased(2, NodeSet::single(3)), 0.25);
  EXPECT_THROW(net.set_all_erased(4, NodeSet::single(1), 0.5), nnc::UsageError);
  EXPECT_THROW(net.set_all_erased(1, NodeSet::single(2), 1.5), nnc::UsageError);
}

TEST(Deterministic, Gf2CutValuesAreRanks) {
  nnc_test::Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = nnc_test::pick(rng, 2, 5);
    std::vector<std::vector<int>> g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : g) {
      for (auto& v : row) v = nnc_test::pick(rng, 0, 1);
    }
    const NodeSet all = NodeSet::full(n);
    const auto det = nnc::DeterministicNetwork::gf2_linear(g);
    const auto dm = det.to_dm_network(std::vector<NodeSet>(static_cast<std::size_t>(n), all));
    const auto inner =
        min_by_cut(nnc::nnc_multicast_bound(dm, nnc::CodingDistribution::uniform_identity(dm), all));
    const auto dist = nnc::CodingDistribution::uniform_identity(dm);
    const auto closed = nnc::deterministic_region(det, dist.time_sharing, dist.inputs, all);
    for (const auto& [s, v] : inner) {
      const double rank = nnc_test::gf2_rank(submatrix(g, s, n));
      EXPECT_NEAR(v, rank, 1e-10) << s.to_string();
      EXPECT_NEAR(*closed.bound(s), rank, 1e-10);
    }
  }
}

TEST(Deterministic, TableValidation) {
  EXPECT_THROW(nnc::DeterministicNetwork({2, 2}, {2, 2}, {{0, 1, 0, 1}, {0, 1, 2, 0}}),
               nnc::UsageError);
  EXPECT_THROW(nnc::DeterministicNetwork({2, 2}, {2, 2}, {{0, 1, 0}, {0, 1, 1, 0}}),
               nnc::UsageError);
}

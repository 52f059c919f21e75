#include <gtest/gtest.h>

#include "generators.hpp"
#include "nnc/coding_distribution.hpp"
#include "nnc/error.hpp"
#include "nnc/info_measures.hpp"

using nnc::CodingMode;
using nnc::NodeSet;

namespace {

nnc::DmNetwork copy_channel() {
  // Single node hearing its own input: Y1 = X1.
  return nnc::DmNetwork({2}, {2}, {1, 0, 0, 1}, {NodeSet::single(1)});
}

}  // namespace

TEST(AssembleJoint, DeterministicChannelCollapsesSupport) {
  const auto net = copy_channel();
  const auto nj = nnc::assemble_joint(net, nnc::CodingDistribution::uniform_identity(net),
                                      CodingMode::kPlain);
  EXPECT_EQ(nj.joint.support_size(), 2u);
  for (double p : nj.joint.probs()) EXPECT_TRUE(p == 0.0 || p == 0.5);
  EXPECT_EQ(nj.joint.labels()[static_cast<std::size_t>(nj.vars.yhat(1))], "Yhat1");
}

TEST(AssembleJoint, RelayChannelIsNormalised) {
  nnc_test::Rng rng(2);
  const auto net = nnc_test::random_dm(rng, {2, 2, 2}, {2, 2, 2},
                                       std::vector<NodeSet>(3, NodeSet::single(3)));
  const auto dist = nnc_test::random_coding(rng, net, 2);
  const auto nj = nnc::assemble_joint(net, dist, CodingMode::kPlain);
  double s = 0.0;
  for (double p : nj.joint.probs()) s += p;
  EXPECT_NEAR(s, 1.0, 1e-10);
  EXPECT_EQ(nj.joint.num_vars(), 1 + 3 * 3);
}

TEST(AssembleJoint, ConstantCompressionIsIndependent) {
  nnc_test::Rng rng(4);
  const auto net = nnc_test::random_dm(rng, {2, 3}, {3, 2}, std::vector<NodeSet>(2, NodeSet::single(2)));
  auto dist = nnc::CodingDistribution::uniform_identity(net);
  dist.yhat_sizes[0] = 3;
  // every row puts all mass on yhat = 2
  dist.compression[0][0].assign(static_cast<std::size_t>(2 * 3 * 3), 0.0);
  for (std::size_t r = 0; r < 6; ++r) dist.compression[0][0][r * 3 + 2] = 1.0;
  const auto nj = nnc::assemble_joint(net, dist, CodingMode::kPlain);
  const auto& v = nj.vars;
  EXPECT_NEAR(nnc::conditional_mi(nj.joint, {v.yhat(1)},
                                  nnc::join({v.xs(NodeSet::full(2)), v.ys(NodeSet::full(2)),
                                             {v.yhat(2)}})),
              0.0, 1e-12);
}

TEST(AssembleJoint, ChannelMarginalIsReproduced) {
  nnc_test::Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto net = nnc_test::random_dm(rng, {2, 3, 1}, {1, 2, 3},
                                         std::vector<NodeSet>(3, NodeSet::single(3)), true);
    const auto dist = nnc_test::random_coding(rng, net, 2);
    const auto nj = nnc::assemble_joint(net, dist, CodingMode::kPlain);
    const auto& v = nj.vars;
    const auto law = dist.input_law(net);
    const auto m = nj.joint.marginal(nnc::join({v.xs(NodeSet::full(3)), v.ys(NodeSet::full(3))}));
    ASSERT_EQ(m.size(), net.input_count() * net.output_count());
    for (std::uint64_t x = 0; x < net.input_count(); ++x) {
      for (std::uint64_t y = 0; y < net.output_count(); ++y) {
        EXPECT_NEAR(m[x * net.output_count() + y], law[x] * net.channel(x, y), 1e-15);
      }
    }
  }
}

TEST(AssembleJoint, InputLawIsProductOverNodes) {
  nnc_test::Rng rng(9);
  const auto net = nnc_test::random_dm(rng, {2, 3}, {1, 1}, std::vector<NodeSet>(2));
  auto dist = nnc_test::random_coding(rng, net, 1);
  const auto law = dist.input_law(net);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 3; ++b) {
      EXPECT_NEAR(law[static_cast<std::size_t>(a * 3 + b)],
                  dist.inputs[0][0][static_cast<std::size_t>(a)] *
                      dist.inputs[1][0][static_cast<std::size_t>(b)],
                  1e-15);
    }
  }
}

TEST(AssembleJoint, SuperpositionLayer) {
  const auto net = nnc::DmNetwork({2, 1}, {1, 2}, {1, 0, 0, 1}, {NodeSet::single(2), NodeSet()});
  nnc::CodingDistribution d;
  d.aux_sizes = {2, 1};
  d.yhat_sizes = {1, 2};
  // U1 = X1 uniform; node 2 keeps Yhat2 = Y2.
  d.inputs = {{{0.5, 0, 0, 0.5}}, {{1.0}}};
  d.compression = {{{1, 1}}, {{1, 0, 0, 1}}};
  EXPECT_THROW(nnc::assemble_joint(net, d, CodingMode::kPlain), nnc::UsageError);
  const auto nj = nnc::assemble_joint(net, d, CodingMode::kSuperposition);
  const auto& v = nj.vars;
  EXPECT_NEAR(nnc::conditional_mi(nj.joint, {v.u(1)}, {v.y(2)}), 1.0, 1e-12);
  EXPECT_NEAR(nnc::conditional_mi(nj.joint, {v.x(1)}, {v.y(2)}, {v.u(1)}), 0.0, 1e-12);
}

TEST(CodingDistribution, ValidationErrors) {
  const auto net = copy_channel();
  auto d = nnc::CodingDistribution::uniform_identity(net);
  EXPECT_NO_THROW(d.validate(net));
  auto bad = d;
  bad.inputs[0][0] = {0.5, 0.5 + 1e-10};
  EXPECT_THROW(bad.validate(net), nnc::UsageError);
  bad = d;
  bad.compression[0][0].pop_back();
  EXPECT_THROW(bad.validate(net), nnc::UsageError);
  bad = d;
  bad.time_sharing = {0.7, 0.2};
  EXPECT_THROW(bad.validate(net), nnc::UsageError);
  bad = d;
  bad.yhat_sizes = {0};
  EXPECT_THROW(bad.validate(net), nnc::UsageError);
}

TEST(CodingDistribution, SilentPresetHasConstantYhat) {
  const auto net = copy_channel();
  const auto d = nnc::CodingDistribution::uniform_silent(net);
  EXPECT_EQ(d.yhat_sizes, std::vector<int>{1});
  const auto nj = nnc::assemble_joint(net, d, CodingMode::kPlain);
  EXPECT_NEAR(nj.joint.entropy({nj.vars.yhat(1)}), 0.0, 1e-15);
}

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "nnc/error.hpp"

using namespace nnc::cli;

namespace {

using Table = std::vector<std::vector<std::string>>;

// Enough CSV for the tool's output: quoted fields may hold commas.
Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          row.back() += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          row.back() += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        row.emplace_back();
      } else {
        row.back() += c;
      }
    }
    t.push_back(row);
  }
  return t;
}

Table read_golden(const std::string& name) {
  std::ifstream f(std::string(NNC_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_csv(ss.str());
}

int column(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t[0].size(); ++i) {
    if (t[0][i] == name) return static_cast<int>(i);
  }
  ADD_FAILURE() << "no column " << name;
  return 0;
}

Table eval(const std::string& bound, const std::string& net, const std::string& dist = "") {
  std::ostringstream out;
  EvalOptions opt;
  opt.bound = bound;
  opt.network_path = std::string(NNC_DOCS_EXAMPLES) + "/" + net;
  if (!dist.empty()) opt.distribution_path = std::string(NNC_DOCS_EXAMPLES) + "/" + dist;
  run_eval(opt, out);
  return parse_csv(out.str());
}

double summary(const Table& t, const std::string& kind) {
  for (const auto& r : t) {
    if (r[0] == kind) return std::stod(r[6]);
  }
  ADD_FAILURE() << "no summary row " << kind;
  return NAN;
}

}  // namespace

TEST(TwrcSweepCommand, MatchesGoldenCurves) {
  std::ostringstream out, log;
  run_twrc_sweep({}, out, log);
  const auto got = parse_csv(out.str());
  const auto want = read_golden("twrc_sweep.csv");
  ASSERT_EQ(got.size(), 11u);
  ASSERT_EQ(want.size(), 11u);
  for (const char* col : {"d", "sum_NNC", "sum_AF", "sum_CF"}) {
    const int gc = column(got, col), wc = column(want, col);
    for (std::size_t i = 1; i < got.size(); ++i) {
      EXPECT_NEAR(std::stod(got[i][gc]), std::stod(want[i][wc]), 1e-7) << col << " row " << i;
    }
  }
}

TEST(TwrcSweepCommand, OmittedSchemesLeaveEmptyCells) {
  TwrcSweepOptions opt;
  opt.af = false;
  opt.steps = 2;
  std::ostringstream out, log;
  run_twrc_sweep(opt, out, log);
  const auto t = parse_csv(out.str());
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[1].size(), 7u);
  EXPECT_TRUE(t[1][column(t, "sum_AF")].empty());
  EXPECT_EQ(t[2][0], "0.5");
}

TEST(IrcSweepCommand, MatchesGoldenCurves) {
  IrcSweepOptions opt;
  opt.steps = 11;
  std::ostringstream out, log;
  run_irc_sweep(opt, out, log);
  const auto got = parse_csv(out.str());
  const auto want = read_golden("irc_sweep.csv");
  ASSERT_EQ(got.size(), 12u);
  ASSERT_EQ(want.size(), 12u);
  for (const char* col : {"sum_NNC_T2", "sum_NNC_T3", "sum_CF", "sum_HF"}) {
    const int gc = column(got, col), wc = column(want, col);
    for (std::size_t i = 1; i < got.size(); ++i) {
      EXPECT_NEAR(std::stod(got[i][gc]), std::stod(want[i][wc]), 1e-7) << col << " row " << i;
    }
  }
}

TEST(GapCheckCommand, RandomNetworksStayWithinBudget) {
  GapCheckOptions opt;
  opt.trials = 3;
  std::ostringstream out;
  EXPECT_EQ(run_gap_check(opt, out), 0);
  const auto t = parse_csv(out.str());
  // 14 cuts per 4-node network with every node a destination
  EXPECT_EQ(t.size(), 1u + 3u * 14u + 1u);
  EXPECT_EQ(t.back()[0], "summary");
}

TEST(EvalCommand, LineNetworkHasUnitCapacity) {
  const auto thm1 = eval("thm1", "line4_noiseless.json");
  EXPECT_EQ(summary(thm1, "min_clamped"), 1.0);
  EXPECT_EQ(summary(thm1, "sum_rate"), 1.0);
  const auto cut = eval("cutset", "line4_noiseless.json");
  EXPECT_EQ(summary(cut, "sum_rate"), 1.0);
  const auto nl = eval("noiseless", "line4_noiseless.json");
  EXPECT_EQ(summary(nl, "min_clamped"), 1.0);
  EXPECT_EQ(summary(nl, "sum_rate"), 1.0);
  // {1,3} cuts two unit edges
  bool seen = false;
  for (const auto& r : nl) {
    if (r[0] == "noiseless" && r[1] == "5") {
      EXPECT_EQ(std::stod(r[5]), 2.0);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

TEST(EvalCommand, RelayExampleMatchesAcrossBounds) {
  const auto thm1 = eval("thm1", "relay_dm.json", "relay_dist.json");
  const auto cf = eval("cf_ext", "relay_dm.json", "relay_dist.json");
  EXPECT_EQ(summary(cf, "feasible"), 1.0);
  EXPECT_NEAR(summary(cf, "R_star"), summary(thm1, "sum_rate"), 1e-12);
  EXPECT_NEAR(summary(thm1, "sum_rate"), 0.5547, 1e-4);
}

TEST(EvalCommand, KindMismatchIsAUsageError) {
  EXPECT_THROW(eval("gauss_inner", "line4_noiseless.json"), nnc::UsageError);
  EXPECT_THROW(eval("thm1", "missing.json"), nnc::UsageError);
  EXPECT_THROW(eval("bogus", "line4_noiseless.json"), nnc::UsageError);
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
  auto twice = [](auto fn) {
    std::ostringstream a, b;
    fn(a);
    fn(b);
    return a.str() == b.str() && !a.str().empty();
  };
  std::ostringstream sink;
  EXPECT_TRUE(twice([&](std::ostream& o) { run_twrc_sweep({}, o, sink); }));
  EXPECT_TRUE(twice([&](std::ostream& o) { run_irc_sweep({}, o, sink); }));
  EXPECT_TRUE(twice([&](std::ostream& o) { run_gap_check({}, o); }));
  EXPECT_TRUE(twice([&](std::ostream& o) {
    run_eval({"thm1", NNC_DOCS_EXAMPLES "/relay_dm.json", NNC_DOCS_EXAMPLES "/relay_dist.json"}, o);
  }));
}

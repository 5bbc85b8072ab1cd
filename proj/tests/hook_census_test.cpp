#include <gtest/gtest.h>

#include <map>

#include "hookforge/hook_census.hpp"
#include "oracle.hpp"

using namespace hookforge;
using namespace hookforge::census;

namespace {

oracle::Parts raw(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

// External hook types of length <= bound, scanning a generous window.
std::map<oracle::ArmLeg, int> oracle_external_types(const oracle::Parts& p, int bound) {
  std::map<oracle::ArmLeg, int> out;
  const int rows = static_cast<int>(p.size()) + bound + 2;
  const int cols = oracle::part(p, 0) + bound + 2;
  for (int r = 0; r < rows; ++r) {
    for (int c = oracle::part(p, r); c < cols; ++c) {
      const auto h = oracle::external_hook(p, r, c);
      if (h.arm + h.leg + 1 <= bound) ++out[h];
    }
  }
  return out;
}

}  // namespace

TEST(Census, InternalHooksOnePerCell) {
  for (const auto& p : partitions_up_to(8)) {
    const auto hooks = internal_hooks(p);
    ASSERT_EQ(static_cast<int>(hooks.size()), p.size());
    for (const auto& h : hooks) {
      const auto o = oracle::internal_hook(raw(p), h.cell.row, h.cell.col);
      EXPECT_EQ(h.stats.arm, o.arm);
      EXPECT_EQ(h.stats.leg, o.leg);
    }
  }
}

TEST(Census, ExternalHooksMatchWindowScan) {
  for (const auto& p : partitions_up_to(8)) {
    for (int hmax : {1, 3, 6}) {
      std::map<oracle::ArmLeg, int> got;
      for (const auto& h : external_hooks_up_to(p, hmax)) {
        ASSERT_LE(h.stats.hook_len, hmax);
        ASSERT_FALSE(p.contains(h.cell));
        ++got[{h.stats.arm, h.stats.leg}];
      }
      EXPECT_EQ(got, oracle_external_types(raw(p), hmax)) << p.to_string() << " hmax " << hmax;
    }
  }
}

TEST(Census, EmptyPartitionHasOneHookOfEachType) {
  const auto ms = hook_type_multiset(external_hooks_up_to(Partition{}, 7), 7);
  EXPECT_EQ(ms.total(), 28);  // types with arm + leg <= 6
  for (int a = 0; a < 7; ++a) {
    for (int l = 0; a + l < 7; ++l) EXPECT_EQ(ms.count({a, l}), 1);
  }
}

TEST(Bessenrodt, WorkedPartition) {
  const auto report = verify_bessenrodt(Partition{8, 4, 3, 2, 2}, 12);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.failures.empty());
  EXPECT_EQ(report.table.size(), 78u);  // types of length <= 12
  for (const auto& row : report.table) EXPECT_EQ(row.external_count, row.internal_count + 1);
  const auto j = report.to_json();
  EXPECT_EQ(j["lambda"], nlohmann::json({8, 4, 3, 2, 2}));
  EXPECT_EQ(j["bound"], 12);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Bessenrodt, AllSmallPartitionsAgainstOracleCounts) {
  for (const auto& p : partitions_up_to(10)) {
    const auto report = verify_bessenrodt(p, 10);
    ASSERT_TRUE(report.pass) << p.to_string();
    // the oracle's own counts satisfy the same identity
    const auto ext = oracle_external_types(raw(p), 10);
    std::map<oracle::ArmLeg, int> in;
    for (int r = 0; r < p.length(); ++r) {
      for (int c = 0; c < p.part(r); ++c) ++in[oracle::internal_hook(raw(p), r, c)];
    }
    for (const auto& row : report.table) {
      const oracle::ArmLeg t{row.type.arm, row.type.leg};
      EXPECT_EQ(row.external_count, ext.count(t) ? ext.at(t) : 0);
      EXPECT_EQ(row.internal_count, in.count(t) ? in.at(t) : 0);
    }
  }
}

TEST(Bessenrodt, BoundBelowLongestHookIsRejected) {
  EXPECT_THROW(verify_bessenrodt(Partition{3, 1}, 3), precondition_error);
  EXPECT_NO_THROW(verify_bessenrodt(Partition{3, 1}, 4));
  EXPECT_THROW(verify_bessenrodt(Partition{}, 0), precondition_error);
  EXPECT_TRUE(verify_bessenrodt(Partition{}, 1).pass);
}

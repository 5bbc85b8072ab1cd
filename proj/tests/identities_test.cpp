#include <gtest/gtest.h>

#include "hookforge/identities.hpp"
#include "oracle.hpp"

using namespace hookforge;
using namespace hookforge::series;

namespace {

using CM = ContentMonomial;

}  // namespace

TEST(Gansner, EmptyAndSingleCell) {
  const auto empty = verify_gansner(Partition{}, 5);
  EXPECT_TRUE(empty.pass);
  EXPECT_EQ(empty.lhs_terms, 1u);
  EXPECT_EQ(rpp_weight_sum(Partition{1}, 5), geom_expand(CM::var(0), 5));
  EXPECT_TRUE(verify_gansner(Partition{1}, 5).pass);
}

TEST(Gansner, SmallPartitions) {
  EXPECT_TRUE(verify_gansner(Partition{2, 1}, 6).pass);
  for (const auto& p : partitions_up_to(4)) EXPECT_TRUE(verify_gansner(p, 6).pass) << p.to_string();
}

TEST(Gansner, MismatchIsReported) {
  // a product with one hook factor missing cannot match the enumeration
  const Partition p{2};
  const auto lhs = rpp_weight_sum(p, 4);
  const auto wrong = geom_expand(CM::var(0), 4);
  EXPECT_NE(lhs, wrong);
  EXPECT_EQ(lhs, internal_hook_product(p, 4));
}

TEST(Skew, EmptyShapeGradedCounts) {
  const auto report = verify_skew(Partition{}, 6);
  ASSERT_TRUE(report.pass);
  const auto expected = oracle::plane_partition_counts(6);
  const auto& counts = report.details["graded_counts"];
  ASSERT_EQ(counts.size(), expected.size());
  for (std::size_t n = 0; n < expected.size(); ++n) {
    EXPECT_EQ(counts[n].get<std::string>(), std::to_string(expected[n]));
  }
}

TEST(Skew, SmallPartitions) {
  EXPECT_TRUE(verify_skew(Partition{1}, 4).pass);
  EXPECT_TRUE(verify_skew(Partition{2, 2}, 6).pass);
  for (const auto& p : partitions_up_to(3)) EXPECT_TRUE(verify_skew(p, 5).pass) << p.to_string();
}

TEST(Wallcrossing, Examples) {
  EXPECT_TRUE(verify_wallcrossing(Partition{}, 6).pass);
  const auto one = verify_wallcrossing(Partition{1}, 6);
  EXPECT_TRUE(one.pass);
  EXPECT_TRUE(one.details["specialization_pass"].get<bool>());
  const auto big = verify_wallcrossing(Partition{8, 4, 3, 2, 2}, 10);
  EXPECT_TRUE(big.pass) << big.to_json().dump();
}

TEST(RefinedRpp, Examples) {
  for (const auto& p : {Partition{1}, Partition{2}, Partition{2, 1}}) {
    const auto r = verify_refined_rpp(p, p.size() == 3 ? 5 : 4);
    EXPECT_TRUE(r.pass) << p.to_string();
    EXPECT_EQ(r.details["hg_round_trip_failures"], 0);
  }
  // shape (1): one RPP per size 0..4
  EXPECT_EQ(verify_refined_rpp(Partition{1}, 4).details["rpp_count"], 5);
}

TEST(HookStripSeries, Examples) {
  const auto unit = verify_hook_strip_series(1, 1, 5);
  EXPECT_TRUE(unit.pass);
  const auto two = verify_hook_strip_series(2, 1, 5);
  EXPECT_TRUE(two.pass);
  EXPECT_EQ(two.details["size_S"], 2);
  EXPECT_EQ(two.details["size_Sprime"], 2);
  EXPECT_TRUE(verify_hook_strip_series(8, 3, 8).pass);
  EXPECT_THROW(verify_hook_strip_series(2, 3, 5), precondition_error);
  EXPECT_THROW(verify_hook_strip_series(1, 0, 5), precondition_error);
}

TEST(Ultimate, Examples) {
  for (int d : {0, 1, 4}) {
    const auto r = verify_ultimate(d, d == 4 ? 8 : 6);
    EXPECT_TRUE(r.pass) << d;
    EXPECT_EQ(r.details["partition_count"], partition_count(d));
  }
  EXPECT_THROW(verify_ultimate(-1, 4), precondition_error);
}

TEST(Identities, NegativeCapIsRejected) {
  EXPECT_THROW(verify_gansner(Partition{1}, -1), precondition_error);
  EXPECT_THROW(verify_skew(Partition{}, -2), precondition_error);
}

TEST(Identities, ReportJsonShape) {
  const auto j = verify_gansner(Partition{2, 1}, 4).to_json();
  for (const char* key : {"identity", "input", "pass", "lhs_terms", "rhs_terms", "mismatch_count", "mismatches", "details"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["identity"], "gansner");
  EXPECT_EQ(j["input"]["cap"], 4);
  EXPECT_TRUE(j["mismatches"].empty());
}

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hookforge/hook_strip.hpp"
#include "oracle.hpp"

using namespace hookforge;
using namespace hookforge::strip;

TEST(HookStrip, WorkedExampleRoundTrip) {
  const auto ext = HookedPartition::make(Partition{6, 4, 3, 3, 1, 1, 1}, {4, 4}, HookSide::external);
  EXPECT_EQ(ext.stats.arm, 3);
  EXPECT_EQ(ext.stats.leg, 3);
  EXPECT_EQ(ext.stats.hand, (Cell{4, 1}));
  EXPECT_EQ(ext.stats.foot, (Cell{1, 4}));
  EXPECT_EQ(ext.stats.content_lo, -3);
  EXPECT_EQ(ext.stats.content_hi, 3);

  const auto in = to_internal(ext);
  EXPECT_EQ(in.lambda, (Partition{6, 5, 5, 4, 4, 1, 1}));
  EXPECT_EQ(in.cell, (Cell{1, 1}));
  EXPECT_EQ(in.side, HookSide::internal);
  EXPECT_EQ(in.stats.hand, (Cell{1, 4}));
  EXPECT_EQ(in.stats.foot, (Cell{4, 1}));
  EXPECT_EQ(to_external(in), ext);
}

TEST(HookStrip, SmallSetSize) {
  EXPECT_EQ(enumerate_S(3, 3).size(), 3u);
  EXPECT_EQ(enumerate_Sprime(0, 3).size(), 3u);
  for (const auto& hp : enumerate_S(3, 3)) EXPECT_EQ(hp.stats.hook_len, 3);
}

TEST(HookStrip, CardinalitiesMatchOracle) {
  for (int d = 1; d <= 8; ++d) {
    for (int ell = 1; ell <= d; ++ell) {
      std::size_t internal = 0;
      std::size_t external = 0;
      for (const auto& p : oracle::partitions_of(d)) {
        for (int r = 0; r < static_cast<int>(p.size()); ++r) {
          for (int c = 0; c < oracle::part(p, r); ++c) {
            const auto h = oracle::internal_hook(p, r, c);
            internal += h.arm + h.leg + 1 == ell;
          }
        }
      }
      for (const auto& p : oracle::partitions_of(d - ell)) {
        for (int r = 0; r <= static_cast<int>(p.size()) + ell; ++r) {
          for (int c = oracle::part(p, r); c <= oracle::part(p, 0) + ell; ++c) {
            const auto h = oracle::external_hook(p, r, c);
            external += h.arm + h.leg + 1 == ell;
          }
        }
      }
      EXPECT_EQ(enumerate_S(d, ell).size(), internal) << d << " " << ell;
      EXPECT_EQ(enumerate_Sprime(d - ell, ell).size(), external) << d << " " << ell;
      EXPECT_EQ(internal, external);
    }
  }
}

TEST(HookStrip, BijectionHoldsForSmallSizes) {
  for (int d = 1; d <= 9; ++d) {
    for (int ell = 1; ell <= d; ++ell) {
      const auto report = verify_hook_strip(d, ell);
      ASSERT_TRUE(report.pass) << report.to_json().dump();
      EXPECT_EQ(report.size_S, report.size_Sprime);
    }
  }
}

TEST(HookStrip, StripsMatchOracleBorderStrips) {
  // every internal hook of length ell spans a border strip of the same size
  for (int d = 1; d <= 8; ++d) {
    for (const auto& p : partitions_of(d)) {
      const oracle::Parts r(p.parts().begin(), p.parts().end());
      for (int ell = 1; ell <= d; ++ell) {
        std::set<std::vector<int>> expected;
        for (const auto& s : oracle::border_strips(r, ell)) expected.insert(s.contents);
        std::set<std::vector<int>> got;
        for (const auto& h : enumerate_S(d, ell)) {
          if (h.lambda != p) continue;
          const auto cells = rim_strip(p, h.stats.content_lo, h.stats.content_hi);
          std::vector<int> contents;
          for (const Cell c : cells) {
            ASSERT_TRUE(p.contains(c));
            contents.push_back(c.content());
          }
          std::sort(contents.begin(), contents.end());
          got.insert(contents);
        }
        EXPECT_EQ(got, expected) << p.to_string() << " " << ell;
      }
    }
  }
}

TEST(HookStrip, Preconditions) {
  EXPECT_THROW(verify_hook_strip(0, 0), precondition_error);
  EXPECT_THROW(verify_hook_strip(3, 4), precondition_error);
  EXPECT_THROW(HookedPartition::make(Partition{2}, {0, 1}, HookSide::external), precondition_error);
}

TEST(HookStrip, ReportJson) {
  const auto j = verify_hook_strip(4, 2).to_json();
  EXPECT_EQ(j["d"], 4);
  EXPECT_EQ(j["ell"], 2);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["size_S"], j["size_Sprime"]);
}

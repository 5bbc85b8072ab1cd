#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hookforge/partition.hpp"

namespace hookforge::strip {

/// A partition together with one of its hooks (an element of S or S').
struct HookedPartition {
  Partition lambda;
  Cell cell;
  HookSide side = HookSide::internal;
  HookStats stats;

  static HookedPartition make(Partition lambda, Cell cell, HookSide side);

  friend bool operator==(const HookedPartition& a, const HookedPartition& b) {
    return a.lambda == b.lambda && a.cell == b.cell && a.side == b.side;
  }
  friend auto operator<=>(const HookedPartition& a, const HookedPartition& b) {
    // partitions compare reverse-lexicographically, then row, then col
    if (auto c = b.lambda <=> a.lambda; c != 0) return c;
    return a.cell <=> b.cell;
  }
};

nlohmann::json to_json(const HookedPartition& hp);

/// Internal hooks of length ell over all partitions of d.
std::vector<HookedPartition> enumerate_S(int d, int ell);
/// External hooks of length ell over all partitions of d.
std::vector<HookedPartition> enumerate_Sprime(int d, int ell);

/// Pushes an external hook out to the border strip with the same contents,
/// adds it, and returns the internal hook of the enlarged partition spanning
/// that strip.
HookedPartition to_internal(const HookedPartition& hp);
/// Inverse of to_internal: removes the border strip under an internal hook.
HookedPartition to_external(const HookedPartition& hp);

/// Cells of the border strip whose contents are content_lo..content_hi along
/// the rim of `outer` (the strip lies inside `outer`).
std::vector<Cell> rim_strip(const Partition& outer, int content_lo, int content_hi);

struct Counterexample {
  HookedPartition external;
  HookedPartition internal;
  std::string predicate;
};

struct HookStripReport {
  int d = 0;
  int ell = 0;
  std::size_t size_S = 0;
  std::size_t size_Sprime = 0;
  bool pass = false;
  std::vector<Counterexample> counterexamples;

  nlohmann::json to_json() const;
};

/// Checks that to_internal maps S'_{d-ell,ell} bijectively onto S_{d,ell},
/// preserving the extremal cells (external hand = internal foot and external
/// foot = internal hand), content sets and hook types, with to_external as
/// inverse. Throws precondition_error unless d >= ell >= 1.
HookStripReport verify_hook_strip(int d, int ell);

}  // namespace hookforge::strip

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hookforge/partition.hpp"

namespace hookforge::census {

struct HookAt {
  Cell cell;
  HookStats stats;
};

/// One entry per cell of lambda, row-major.
std::vector<HookAt> internal_hooks(const Partition& lambda);

/// External hooks with hook length <= hmax, row-major.
std::vector<HookAt> external_hooks_up_to(const Partition& lambda, int hmax);

/// Multiset of hook types (arm, leg) with arm + leg + 1 <= bound.
class HookTypeMultiset {
 public:
  explicit HookTypeMultiset(int bound);

  void add(HookType t, std::int64_t times = 1);
  std::int64_t count(HookType t) const;
  int bound() const { return bound_; }
  const std::map<HookType, std::int64_t>& counts() const { return counts_; }
  std::int64_t total() const;

  friend bool operator==(const HookTypeMultiset&, const HookTypeMultiset&) = default;

 private:
  int bound_;
  std::map<HookType, std::int64_t> counts_;
};

HookTypeMultiset hook_type_multiset(const std::vector<HookAt>& hooks, int bound);

struct TypeCount {
  HookType type;
  std::int64_t external_count = 0;
  std::int64_t internal_count = 0;
};

struct BessenrodtReport {
  Partition lambda;
  int bound = 0;
  bool pass = false;
  /// Every type with arm + leg + 1 <= bound, in (hook length, arm) order.
  std::vector<TypeCount> table;
  std::vector<TypeCount> failures;

  nlohmann::json to_json() const;
};

/// Compares external and internal hook types of lambda type by type:
/// external = 1 + internal for every type of length <= bound. Throws
/// precondition_error when bound is below the largest internal hook length.
BessenrodtReport verify_bessenrodt(const Partition& lambda, int bound);

}  // namespace hookforge::census

#include "hookforge/hook_census.hpp"

#include <algorithm>

namespace hookforge::census {

std::vector<HookAt> internal_hooks(const Partition& lambda) {
  std::vector<HookAt> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) {
      out.push_back({{r, c}, hook_stats(lambda, {r, c}, HookSide::internal)});
    }
  }
  return out;
}

std::vector<HookAt> external_hooks_up_to(const Partition& lambda, int hmax) {
  std::vector<HookAt> out;
  if (hmax < 1) return out;
  // For an outside cell, leg = row - column_length(col) <= hmax - 1 forces
  // row < length + hmax, and arm = col - part(row) <= hmax - 1 forces
  // col < largest + hmax.
  const int rows = lambda.length() + hmax;
  const int cols = lambda.largest() + hmax;
  for (int r = 0; r < rows; ++r) {
    for (int c = lambda.part(r); c < cols; ++c) {
      const Cell cell{r, c};
      HookStats h = hook_stats(lambda, cell, HookSide::external);
      if (h.hook_len <= hmax) out.push_back({cell, h});
    }
  }
  return out;
}

HookTypeMultiset::HookTypeMultiset(int bound) : bound_(bound) {}

void HookTypeMultiset::add(HookType t, std::int64_t times) {
  if (t.length() > bound_ || times == 0) return;
  counts_[t] += times;
}

std::int64_t HookTypeMultiset::count(HookType t) const {
  auto it = counts_.find(t);
  return it == counts_.end() ? 0 : it->second;
}

std::int64_t HookTypeMultiset::total() const {
  std::int64_t s = 0;
  for (const auto& [t, n] : counts_) s += n;
  return s;
}

HookTypeMultiset hook_type_multiset(const std::vector<HookAt>& hooks, int bound) {
  HookTypeMultiset m(bound);
  for (const auto& h : hooks) m.add(type_of(h.stats));
  return m;
}

BessenrodtReport verify_bessenrodt(const Partition& lambda, int bound) {
  if (bound < 1) throw precondition_error("bound must be positive");
  const auto internal = internal_hooks(lambda);
  int longest = 0;
  for (const auto& h : internal) longest = std::max(longest, h.stats.hook_len);
  if (bound < longest) {
    throw precondition_error("bound " + std::to_string(bound) +
                             " is below the largest internal hook length " +
                             std::to_string(longest) + " of (" + lambda.to_string() + ")");
  }
  const auto in_types = hook_type_multiset(internal, bound);
  const auto ex_types = hook_type_multiset(external_hooks_up_to(lambda, bound), bound);

  BessenrodtReport report;
  report.lambda = lambda;
  report.bound = bound;
  for (int h = 1; h <= bound; ++h) {
    for (int arm = h - 1; arm >= 0; --arm) {
      const HookType t{arm, h - 1 - arm};
      TypeCount row{t, ex_types.count(t), in_types.count(t)};
      report.table.push_back(row);
      if (row.external_count != 1 + row.internal_count) report.failures.push_back(row);
    }
  }
  report.pass = report.failures.empty();
  return report;
}

nlohmann::json BessenrodtReport::to_json() const {
  auto encode = [](const TypeCount& t) {
    return nlohmann::json{{"arm", t.type.arm},
                          {"leg", t.type.leg},
                          {"external_count", t.external_count},
                          {"internal_count", t.internal_count}};
  };
  nlohmann::json j;
  j["lambda"] = std::vector<int>(lambda.parts().begin(), lambda.parts().end());
  j["bound"] = bound;
  j["pass"] = pass;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) j["failures"].push_back(encode(f));
  j["table"] = nlohmann::json::array();
  for (const auto& t : table) j["table"].push_back(encode(t));
  return j;
}

}  // namespace hookforge::census

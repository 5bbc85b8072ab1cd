#include "hookforge/hook_strip.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hookforge/hook_census.hpp"

namespace hookforge::strip {

namespace {

// Maya diagram of a charge-zero partition in "n" units (bead n sits at the
// half-integer n + 1/2). Beads are explicit down to -rows; everything below
// is occupied.
struct Beads {
  std::vector<int> occupied;  // strictly decreasing

  Beads(const Partition& lambda, int rows) {
    occupied.reserve(static_cast<std::size_t>(rows));
    for (int k = 1; k <= rows; ++k) occupied.push_back(lambda.part(k - 1) - k);
  }

  bool is_occupied(int n) const {
    return std::find(occupied.begin(), occupied.end(), n) != occupied.end() ||
           n < occupied.back();
  }

  int occupied_above(int n) const {
    return static_cast<int>(std::count_if(occupied.begin(), occupied.end(),
                                          [n](int m) { return m > n; }));
  }

  void move(int from, int to) {
    auto it = std::find(occupied.begin(), occupied.end(), from);
    if (it == occupied.end()) throw std::logic_error("bead move from an empty position");
    *it = to;
    std::sort(occupied.begin(), occupied.end(), std::greater<>());
  }

  Partition partition() const {
    std::vector<int> parts;
    for (std::size_t k = 0; k < occupied.size(); ++k) {
      const int p = occupied[k] + static_cast<int>(k) + 1;
      if (p <= 0) break;
      parts.push_back(p);
    }
    return Partition(std::move(parts));
  }
};

}  // namespace

HookedPartition HookedPartition::make(Partition lambda, Cell cell, HookSide side) {
  HookStats stats = hook_stats(lambda, cell, side);
  return {std::move(lambda), cell, side, stats};
}

nlohmann::json to_json(const HookedPartition& hp) {
  return {{"lambda", std::vector<int>(hp.lambda.parts().begin(), hp.lambda.parts().end())},
          {"cell", {hp.cell.row, hp.cell.col}},
          {"side", std::string(to_string(hp.side))},
          {"arm", hp.stats.arm},
          {"leg", hp.stats.leg},
          {"hand", {hp.stats.hand.row, hp.stats.hand.col}},
          {"foot", {hp.stats.foot.row, hp.stats.foot.col}},
          {"contents", {hp.stats.content_lo, hp.stats.content_hi}}};
}

std::vector<HookedPartition> enumerate_S(int d, int ell) {
  std::vector<HookedPartition> out;
  if (d < 0 || ell < 1 || d < ell) return out;
  for (const auto& lambda : partitions_of(d)) {
    for (const auto& h : census::internal_hooks(lambda)) {
      if (h.stats.hook_len == ell) out.push_back({lambda, h.cell, HookSide::internal, h.stats});
    }
  }
  return out;
}

std::vector<HookedPartition> enumerate_Sprime(int d, int ell) {
  std::vector<HookedPartition> out;
  if (d < 0 || ell < 1) return out;
  for (const auto& lambda : partitions_of(d)) {
    for (const auto& h : census::external_hooks_up_to(lambda, ell)) {
      if (h.stats.hook_len == ell) out.push_back({lambda, h.cell, HookSide::external, h.stats});
    }
  }
  return out;
}

HookedPartition to_internal(const HookedPartition& hp) {
  if (hp.side != HookSide::external) {
    throw precondition_error("to_internal expects an external hook");
  }
  const int lo = hp.stats.content_lo;
  const int hi = hp.stats.content_hi;
  // The row of the external hook owns the bead just below content lo; the
  // column owns the hole just above content hi. Sliding the bead into the
  // hole adds the border strip with contents lo..hi.
  Beads beads(hp.lambda, std::max(hp.lambda.length(), hp.cell.row + 1) + 1);
  const int from = lo - 1;
  const int to = hi;
  if (!beads.is_occupied(from) || beads.is_occupied(to)) {
    throw std::logic_error("external hook at " + to_string(hp.cell) + " of (" +
                           hp.lambda.to_string() + ") does not match a bead/hole pair");
  }
  beads.move(from, to);
  const Partition mu = beads.partition();
  const Cell corner{beads.occupied_above(to), from + beads.occupied_above(from)};
  HookedPartition out = HookedPartition::make(mu, corner, HookSide::internal);
  if (out.stats.content_lo != lo || out.stats.content_hi != hi) {
    throw std::logic_error("strip insertion changed the content window");
  }
  return out;
}

HookedPartition to_external(const HookedPartition& hp) {
  if (hp.side != HookSide::internal) {
    throw precondition_error("to_external expects an internal hook");
  }
  const int lo = hp.stats.content_lo;
  const int hi = hp.stats.content_hi;
  Beads beads(hp.lambda, hp.lambda.length() + hp.stats.hook_len + 1);
  const int from = hi;
  const int to = lo - 1;
  if (!beads.is_occupied(from) || beads.is_occupied(to)) {
    throw std::logic_error("internal hook at " + to_string(hp.cell) + " of (" +
                           hp.lambda.to_string() + ") does not match a bead/hole pair");
  }
  beads.move(from, to);
  const Partition lambda = beads.partition();
  const Cell corner{beads.occupied_above(to), from + beads.occupied_above(from)};
  HookedPartition out = HookedPartition::make(lambda, corner, HookSide::external);
  if (out.stats.content_lo != lo || out.stats.content_hi != hi) {
    throw std::logic_error("strip removal changed the content window");
  }
  return out;
}

std::vector<Cell> rim_strip(const Partition& outer, int content_lo, int content_hi) {
  std::vector<Cell> cells;
  for (int k = content_lo; k <= content_hi; ++k) {
    // south-east-most cell of `outer` on diagonal k
    std::optional<Cell> last;
    for (int r = std::max(0, -k); r < outer.length(); ++r) {
      if (outer.contains({r, r + k})) last = Cell{r, r + k};
    }
    if (last) cells.push_back(*last);
  }
  return cells;
}

HookStripReport verify_hook_strip(int d, int ell) {
  if (ell < 1 || d < ell) {
    throw precondition_error("hook-to-strip needs d >= ell >= 1 (got d=" + std::to_string(d) +
                             ", ell=" + std::to_string(ell) + ")");
  }
  const auto S = enumerate_S(d, ell);
  const auto Sprime = enumerate_Sprime(d - ell, ell);
  HookStripReport report;
  report.d = d;
  report.ell = ell;
  report.size_S = S.size();
  report.size_Sprime = Sprime.size();

  const std::set<HookedPartition> s_set(S.begin(), S.end());
  std::set<HookedPartition> images;
  auto fail = [&](const HookedPartition& e, const HookedPartition& g, std::string what) {
    report.counterexamples.push_back({e, g, std::move(what)});
  };

  for (const auto& e : Sprime) {
    HookedPartition g;
    try {
      g = to_internal(e);
    } catch (const std::exception& ex) {
      fail(e, e, std::string("to_internal_failed: ") + ex.what());
      continue;
    }
    if (!s_set.count(g)) fail(e, g, "image_in_S");
    if (g.stats.hand != e.stats.foot || g.stats.foot != e.stats.hand) {
      fail(e, g, "hand_foot_positions");
    }
    if (g.stats.content_lo != e.stats.content_lo || g.stats.content_hi != e.stats.content_hi) {
      fail(e, g, "content_set");
    }
    if (type_of(g.stats) != type_of(e.stats)) fail(e, g, "hook_type");
    // mu / lambda must be exactly the rim strip with the hook's contents
    std::set<Cell> added;
    bool nested = true;
    for (int r = 0; r < g.lambda.length(); ++r) {
      if (e.lambda.part(r) > g.lambda.part(r)) nested = false;
      for (int c = e.lambda.part(r); c < g.lambda.part(r); ++c) added.insert({r, c});
    }
    const auto rim = rim_strip(g.lambda, e.stats.content_lo, e.stats.content_hi);
    if (!nested || added != std::set<Cell>(rim.begin(), rim.end()) ||
        static_cast<int>(added.size()) != ell) {
      fail(e, g, "strip_contents");
    }
    if (!images.insert(g).second) fail(e, g, "injective");
    try {
      if (!(to_external(g) == e)) fail(e, g, "round_trip");
    } catch (const std::exception& ex) {
      fail(e, g, std::string("to_external_failed: ") + ex.what());
    }
  }
  for (const auto& s : S) {
    try {
      const auto back = to_external(s);
      if (!(to_internal(back) == s)) fail(back, s, "inverse_round_trip");
    } catch (const std::exception& ex) {
      fail(s, s, std::string("inverse_failed: ") + ex.what());
    }
  }
  if (S.size() != Sprime.size() && report.counterexamples.empty()) {
    report.counterexamples.push_back({HookedPartition{}, HookedPartition{}, "cardinality"});
  }
  report.pass = report.counterexamples.empty() && S.size() == Sprime.size();
  return report;
}

nlohmann::json HookStripReport::to_json() const {
  nlohmann::json j;
  j["d"] = d;
  j["ell"] = ell;
  j["size_S"] = size_S;
  j["size_Sprime"] = size_Sprime;
  j["pass"] = pass;
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : counterexamples) {
    j["counterexamples"].push_back({{"external", strip::to_json(c.external)},
                                    {"internal", strip::to_json(c.internal)},
                                    {"predicate", c.predicate}});
  }
  return j;
}

}  // namespace hookforge::strip

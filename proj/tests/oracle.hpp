#pragma once

// Independent brute-force reference implementations. They work on plain part
// vectors and walk diagrams cell by cell, sharing no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

inline int part(const Parts& p, int r) {
  return r >= 0 && r < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(r)] : 0;
}

inline bool inside(const Parts& p, int r, int c) { return r >= 0 && c >= 0 && c < part(p, r); }

inline int size(const Parts& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

struct ArmLeg {
  int arm = 0;
  int leg = 0;
  friend auto operator<=>(const ArmLeg&, const ArmLeg&) = default;
};

inline ArmLeg internal_hook(const Parts& p, int r, int c) {
  ArmLeg h;
  while (inside(p, r, c + h.arm + 1)) ++h.arm;
  while (inside(p, r + h.leg + 1, c)) ++h.leg;
  return h;
}

inline ArmLeg external_hook(const Parts& p, int r, int c) {
  ArmLeg h;
  while (c - h.arm - 1 >= 0 && !inside(p, r, c - h.arm - 1)) ++h.arm;
  while (r - h.leg - 1 >= 0 && !inside(p, r - h.leg - 1, c)) ++h.leg;
  return h;
}

inline void partitions_rec(int remaining, int max_part, Parts& cur, std::vector<Parts>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Parts> partitions_of(int n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

/// Thin: band widths (gaps between distinct parts, smallest first) and band
/// heights (multiplicities, largest part first) each dominate the sum of
/// their predecessors.
inline bool thin(const Parts& p) {
  std::vector<int> distinct;
  std::vector<int> mult;
  for (int v : p) {
    if (distinct.empty() || distinct.back() != v) {
      distinct.push_back(v);
      mult.push_back(0);
    }
    ++mult.back();
  }
  std::vector<int> widths;
  int prev = 0;
  for (auto it = distinct.rbegin(); it != distinct.rend(); ++it) {
    widths.push_back(*it - prev);
    prev = *it;
  }
  auto dominated = [](const std::vector<int>& v) {
    int sum = 0;
    for (std::size_t n = 0; n < v.size(); ++n) {
      if (n > 0 && sum > v[n]) return false;
      sum += v[n];
    }
    return true;
  };
  return dominated(widths) && dominated(mult);
}

/// Plane partitions of each size 0..nmax: rows are partitions, each row
/// dominated entrywise by the row above.
inline std::vector<std::int64_t> plane_partition_counts(int nmax) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(nmax) + 1, 0);
  std::function<void(const Parts&, int)> rows = [&](const Parts& above, int used) {
    ++counts[static_cast<std::size_t>(used)];
    // next row: weakly decreasing, entry k at most above[k], nonempty
    Parts row;
    std::function<void(int)> extend = [&](int budget) {
      const std::size_t k = row.size();
      if (!row.empty()) rows(row, used + size(row));
      if (k >= above.size()) return;
      const int cap = std::min({above[k], row.empty() ? above[k] : row.back(), budget});
      for (int v = 1; v <= cap; ++v) {
        row.push_back(v);
        extend(budget - v);
        row.pop_back();
      }
    };
    extend(nmax - used);
  };
  // the first row is bounded only by the budget
  rows(Parts(static_cast<std::size_t>(nmax), nmax), 0);
  return counts;
}

inline std::int64_t partition_count(int n) { return static_cast<std::int64_t>(partitions_of(n).size()); }

struct Strip {
  Parts inner;
  int rows = 0;
  std::vector<int> contents;  // sorted
};

/// All border strips of size e removable from lambda, by diagram surgery:
/// inner partitions of the right size whose skew complement is connected
/// and has no 2 x 2 block.
inline std::vector<Strip> border_strips(const Parts& lambda, int e) {
  std::vector<Strip> out;
  const int target = size(lambda) - e;
  if (target < 0) return out;
  for (const Parts& mu : partitions_of(target)) {
    bool contained = mu.size() <= lambda.size();
    for (std::size_t r = 0; contained && r < mu.size(); ++r) contained = mu[r] <= lambda[r];
    if (!contained) continue;
    std::set<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(lambda.size()); ++r) {
      for (int c = part(mu, r); c < part(lambda, r); ++c) cells.insert({r, c});
    }
    bool block = false;
    for (const auto& [r, c] : cells) {
      if (cells.count({r + 1, c}) && cells.count({r, c + 1}) && cells.count({r + 1, c + 1})) block = true;
    }
    if (block || cells.empty()) continue;
    std::set<std::pair<int, int>> seen{*cells.begin()};
    std::queue<std::pair<int, int>> todo;
    todo.push(*cells.begin());
    while (!todo.empty()) {
      const auto [r, c] = todo.front();
      todo.pop();
      for (const auto& n : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}}) {
        if (cells.count(n) && seen.insert(n).second) todo.push(n);
      }
    }
    if (seen.size() != cells.size()) continue;
    Strip s;
    s.inner = mu;
    std::set<int> rows;
    for (const auto& [r, c] : cells) {
      rows.insert(r);
      s.contents.push_back(c - r);
    }
    std::sort(s.contents.begin(), s.contents.end());
    s.rows = static_cast<int>(rows.size());
    out.push_back(s);
  }
  return out;
}

/// Every filling of lambda with entries 0..max_entry that weakly increases
/// along rows and columns, grouped by total size. Exponential; tiny shapes
/// only.
inline std::vector<std::map<std::pair<int, int>, int>> brute_rpps(const Parts& lambda, int max_size) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r) {
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) cells.push_back({r, c});
  }
  std::vector<std::map<std::pair<int, int>, int>> out;
  std::vector<int> values(cells.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      std::map<std::pair<int, int>, int> f;
      int total = 0;
      for (std::size_t n = 0; n < cells.size(); ++n) {
        total += values[n];
        f[cells[n]] = values[n];
      }
      if (total > max_size) return;
      for (const auto& [cell, v] : f) {
        const auto [r, c] = cell;
        if (r > 0 && f[{r - 1, c}] > v) return;
        if (c > 0 && f[{r, c - 1}] > v) return;
      }
      std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
      out.push_back(f);
      return;
    }
    for (int v = 0; v <= max_size; ++v) {
      values[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle

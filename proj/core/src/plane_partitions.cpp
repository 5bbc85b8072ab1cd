#include "hookforge/plane_partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookforge::pp {

namespace {

using Grid = std::vector<std::vector<int>>;

Grid shape_grid(const Partition& lambda) {
  Grid g;
  for (int r = 0; r < lambda.length(); ++r) {
    g.emplace_back(static_cast<std::size_t>(lambda.part(r)), 0);
  }
  return g;
}

int& cell_ref(Grid& g, Cell c) {
  return g[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)];
}

Filling rpp_from_grid(const Partition& lambda, const Grid& g) {
  Filling f;
  f.shape = lambda;
  f.side = FillingSide::rpp;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) {
      f.set({r, c}, g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
  }
  return f;
}

}  // namespace

void Filling::set(Cell c, int value) {
  auto it = entries.find(c);
  if (it != entries.end()) {
    size -= it->second;
    entries.erase(it);
  }
  if (value != 0) {
    entries.emplace(c, value);
    size += value;
  }
}

nlohmann::json to_json(const Filling& f) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [cell, v] : f.entries) entries.push_back({cell.row, cell.col, v});
  return {{"shape", std::vector<int>(f.shape.parts().begin(), f.shape.parts().end())},
          {"side", f.side == FillingSide::rpp ? "rpp" : "spp"},
          {"entries", std::move(entries)}};
}

bool is_valid(const Filling& f) {
  for (const auto& [cell, v] : f.entries) {
    if (v <= 0 || cell.row < 0 || cell.col < 0) return false;
    const bool inside = f.shape.contains(cell);
    if ((f.side == FillingSide::rpp) != inside) return false;
  }
  if (f.side == FillingSide::rpp) {
    for (int r = 0; r < f.shape.length(); ++r) {
      for (int c = 0; c < f.shape.part(r); ++c) {
        const int v = f.at({r, c});
        if (r > 0 && f.at({r - 1, c}) > v) return false;
        if (c > 0 && f.at({r, c - 1}) > v) return false;
      }
    }
  } else {
    for (const auto& [cell, v] : f.entries) {
      const Cell up{cell.row - 1, cell.col};
      const Cell left{cell.row, cell.col - 1};
      if (up.row >= 0 && !f.shape.contains(up) && f.at(up) < v) return false;
      if (left.col >= 0 && !f.shape.contains(left) && f.at(left) < v) return false;
    }
  }
  return true;
}

void for_each_rpp(const Partition& lambda, int max_size, const FillingVisitor& visit) {
  if (max_size < 0) return;
  std::vector<Cell> cells;
  std::vector<int> quadrant;  // cells of lambda weakly south-east of each cell
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) {
      cells.push_back({r, c});
      int q = 0;
      for (int rr = r; rr < lambda.length() && lambda.part(rr) > c; ++rr) q += lambda.part(rr) - c;
      quadrant.push_back(q);
    }
  }
  Grid g = shape_grid(lambda);
  auto recurse = [&](auto&& self, std::size_t k, int budget) -> void {
    if (k == cells.size()) {
      visit(rpp_from_grid(lambda, g));
      return;
    }
    const Cell cell = cells[k];
    int lo = 0;
    if (cell.row > 0) lo = std::max(lo, g[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col)]);
    if (cell.col > 0) lo = std::max(lo, g[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col - 1)]);
    // every cell south-east of this one is at least v
    for (int v = lo; v * quadrant[k] <= budget; ++v) {
      cell_ref(g, cell) = v;
      self(self, k + 1, budget - v);
    }
    cell_ref(g, cell) = 0;
  };
  recurse(recurse, 0, max_size);
}

std::vector<Filling> rpp_enumerate(const Partition& lambda, int max_size) {
  std::vector<Filling> out;
  for_each_rpp(lambda, max_size, [&](const Filling& f) { out.push_back(f); });
  return out;
}

std::vector<Cell> spp_support_window(const Partition& lambda, int max_size) {
  std::vector<Cell> cells;
  if (max_size <= 0) return cells;
  for (int r = 0; r < lambda.length() + max_size; ++r) {
    for (int c = lambda.part(r); c < lambda.largest() + max_size; ++c) {
      int forced = 0;
      for (int rr = 0; rr <= r && forced <= max_size; ++rr) {
        forced += std::max(0, c + 1 - lambda.part(rr));
      }
      if (forced <= max_size) cells.push_back({r, c});
    }
  }
  return cells;
}

void for_each_spp(const Partition& lambda, int max_size, const FillingVisitor& visit) {
  if (max_size < 0) return;
  const std::vector<Cell> window = spp_support_window(lambda, max_size);
  std::map<Cell, int> values;
  auto value_at = [&](Cell c) {
    auto it = values.find(c);
    return it == values.end() ? 0 : it->second;
  };
  auto recurse = [&](auto&& self, std::size_t k, int budget) -> void {
    if (k == window.size()) {
      Filling f;
      f.shape = lambda;
      f.side = FillingSide::spp;
      for (const auto& [cell, v] : values) f.set(cell, v);
      visit(f);
      return;
    }
    const Cell cell = window[k];
    int hi = budget;
    const Cell up{cell.row - 1, cell.col};
    const Cell left{cell.row, cell.col - 1};
    if (up.row >= 0 && !lambda.contains(up)) hi = std::min(hi, value_at(up));
    if (left.col >= 0 && !lambda.contains(left)) hi = std::min(hi, value_at(left));
    for (int v = 0; v <= hi; ++v) {
      if (v == 0) {
        values.erase(cell);
      } else {
        values[cell] = v;
      }
      self(self, k + 1, budget - v);
    }
    values.erase(cell);
  };
  recurse(recurse, 0, max_size);
}

std::vector<Filling> spp_enumerate(const Partition& lambda, int max_size) {
  std::vector<Filling> out;
  for_each_spp(lambda, max_size, [&](const Filling& f) { out.push_back(f); });
  return out;
}

int HookMultiplicity::weight() const {
  int w = 0;
  for (const auto& [cell, n] : mult) w += n * hook_stats(shape, cell, HookSide::internal).hook_len;
  return w;
}

HookMultiplicity hg_decompose(const Filling& f) {
  if (f.side != FillingSide::rpp) throw precondition_error("hg_decompose expects an RPP");
  const Partition& lambda = f.shape;
  Grid g = shape_grid(lambda);
  for (const auto& [cell, v] : f.entries) cell_ref(g, cell) = v;

  HookMultiplicity out;
  out.shape = lambda;
  int start_col = 0;
  for (;;) {
    // leftmost column with a nonzero entry; its bottom entry is the largest
    while (start_col < lambda.largest() &&
           g[static_cast<std::size_t>(lambda.column_length(start_col) - 1)]
            [static_cast<std::size_t>(start_col)] == 0) {
      ++start_col;
    }
    if (start_col >= lambda.largest()) break;
    Cell at{lambda.column_length(start_col) - 1, start_col};
    std::vector<Cell> path{at};
    for (;;) {
      if (at.row > 0 && g[static_cast<std::size_t>(at.row - 1)][static_cast<std::size_t>(at.col)] ==
                            g[static_cast<std::size_t>(at.row)][static_cast<std::size_t>(at.col)]) {
        --at.row;
      } else if (at.col + 1 < lambda.part(at.row)) {
        ++at.col;
      } else {
        break;
      }
      path.push_back(at);
    }
    for (const Cell c : path) --cell_ref(g, c);
    ++out.mult[{at.row, start_col}];
  }
  return out;
}

Filling hg_compose(const HookMultiplicity& m) {
  const Partition& lambda = m.shape;
  Grid g = shape_grid(lambda);
  // Undo the peeling in reverse: columns east to west, and within a column
  // rows north to south.
  for (int col = lambda.largest() - 1; col >= 0; --col) {
    for (int row = 0; row < lambda.column_length(col); ++row) {
      const int times = m.at({row, col});
      if (times < 0) throw precondition_error("negative hook multiplicity");
      for (int t = 0; t < times; ++t) {
        Cell at{row, lambda.part(row) - 1};
        std::vector<Cell> path{at};
        for (;;) {
          const bool can_drop = at.row + 1 < lambda.column_length(at.col) &&
                                g[static_cast<std::size_t>(at.row + 1)][static_cast<std::size_t>(at.col)] ==
                                    g[static_cast<std::size_t>(at.row)][static_cast<std::size_t>(at.col)];
          if (can_drop) {
            ++at.row;
          } else if (at.col > col) {
            --at.col;
          } else {
            break;
          }
          path.push_back(at);
        }
        if (at.row != lambda.column_length(col) - 1) {
          throw std::logic_error("Hillman-Grassl insertion did not end at the foot of column " +
                                 std::to_string(col));
        }
        for (const Cell c : path) ++cell_ref(g, c);
      }
    }
  }
  return rpp_from_grid(lambda, g);
}

RefinedWeight refined_weight(const Filling& f) {
  const HookMultiplicity m = hg_decompose(f);
  RefinedWeight w;
  for (const auto& [cell, n] : m.mult) {
    const HookStats h = hook_stats(f.shape, cell, HookSide::internal);
    w.q_exponent += n * h.hook_len;
    w.t_exponent += n * (h.leg - h.arm - 1);
  }
  return w;
}

Partition dualize(const Partition& lambda, int n) {
  if (n < 0 || lambda.largest() > n || lambda.length() > n) {
    throw precondition_error("(" + lambda.to_string() + ") does not fit in the " +
                             std::to_string(n) + "x" + std::to_string(n) + " box");
  }
  std::vector<int> parts;
  for (int r = 1; r <= n; ++r) {
    const int p = n - lambda.part(n - r);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

Filling spp_to_dual_rpp(const Filling& spp, int n) {
  if (spp.side != FillingSide::spp) throw precondition_error("expected an SPP");
  Filling out;
  out.shape = dualize(spp.shape, n);
  out.side = FillingSide::rpp;
  for (const auto& [cell, v] : spp.entries) {
    if (cell.row >= n || cell.col >= n) {
      throw precondition_error("SPP entry at " + to_string(cell) + " lies outside the box");
    }
    out.set({n - 1 - cell.row, n - 1 - cell.col}, v);
  }
  return out;
}

}  // namespace hookforge::pp

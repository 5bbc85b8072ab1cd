#include "hookforge/tectonic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace hookforge::tectonic {

namespace {

std::string coord_string(PlateCoord p) {
  return "R(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

void require_plate(const Subdivision& s, PlateCoord p) {
  if (p.i < 1 || p.j < 1 || p.i > s.K + 1 || p.j > s.K + 1) {
    throw precondition_error(coord_string(p) + " is outside the band grid");
  }
  if (!s.is_plate(p.i, p.j)) {
    throw precondition_error(coord_string(p) + " is a tile, not a plate");
  }
}

void require_thin(const Partition& lambda) {
  const auto w = check_thin(lambda);
  if (!w.thin) {
    throw not_thin_error("partition (" + lambda.to_string() + ") is not thin: " + w.failure);
  }
}

// Sum of v_t for t = lo..hi (1-based, inclusive); zero for an empty range.
std::int64_t band_sum(const std::vector<int>& v, int lo, int hi) {
  std::int64_t s = 0;
  for (int t = std::max(lo, 1); t <= hi; ++t) s += v[static_cast<std::size_t>(t - 1)];
  return s;
}

// One axis of the simplified thin-case intersection formula. `a` and `b` are
// the band indices along this axis, `a_other` and `b_other` the indices along
// the other axis (which fix the shift).
std::optional<std::int64_t> closed_axis(const std::vector<int>& len, int K, int a,
                                        int a_other, int b, int b_other) {
  if (a < b) {
    return band_sum(len, K + 2 - a_other, a) - band_sum(len, K + 2 - b_other, b - 1);
  }
  if (a > b) {
    return band_sum(len, K + 2 - b_other, b) - band_sum(len, K + 2 - a_other, a - 1);
  }
  if (a == K + 1) return std::nullopt;
  const std::int64_t offset_a = band_sum(len, K + 2 - a_other, a - 1);
  const std::int64_t offset_b = band_sum(len, K + 2 - b_other, b - 1);
  const std::int64_t gap = offset_a > offset_b ? offset_a - offset_b : offset_b - offset_a;
  return len[static_cast<std::size_t>(a - 1)] - gap;
}

std::optional<std::int64_t> axis_overlap(std::int64_t lo1, std::optional<std::int64_t> hi1,
                                         std::int64_t lo2, std::optional<std::int64_t> hi2) {
  if (!hi1 && !hi2) return std::nullopt;
  const std::int64_t lo = std::max(lo1, lo2);
  std::int64_t hi;
  if (!hi1) {
    hi = *hi2;
  } else if (!hi2) {
    hi = *hi1;
  } else {
    hi = std::min(*hi1, *hi2);
  }
  return hi - lo;
}

// The closed form is an overlap length only along axes of a rectangle with
// positive area; otherwise all it promises is that some axis is nonpositive.
bool extents_agree(const Extent& direct, const Extent& closed) {
  if (direct.has_cells() != closed.has_cells()) return false;
  return !direct.has_cells() || direct == closed;
}

}  // namespace

bool LatticeRect::contains(Cell c) const {
  return c.row >= row_lo && c.col >= col_lo && (!row_hi || c.row < *row_hi) &&
         (!col_hi || c.col < *col_hi);
}

PlateCoord plate_of(const Partition& lambda, Cell c) {
  if (lambda.contains(c)) {
    throw precondition_error("cell " + to_string(c) + " lies inside (" + lambda.to_string() +
                             ")");
  }
  if (lambda.empty()) return {1, 1};
  const Subdivision s = subdivision(lambda);
  return {s.column_band(c.col), s.row_band(c.row)};
}

LatticeRect band_rect(const Subdivision& s, PlateCoord p) {
  LatticeRect r;
  r.col_lo = s.column_offset(p.i - 1);
  r.row_lo = s.row_offset(p.j - 1);
  if (p.i <= s.K) r.col_hi = s.column_offset(p.i);
  if (p.j <= s.K) r.row_hi = s.row_offset(p.j);
  return r;
}

Shift theta_shift(const Subdivision& s, PlateCoord p) {
  require_plate(s, p);
  return {s.row_offset(s.K + 1 - p.i), s.column_offset(s.K + 1 - p.j)};
}

Shift theta_shift(const Partition& lambda, PlateCoord p) {
  if (lambda.empty()) {
    if (p.i == 1 && p.j == 1) return {};
    throw precondition_error("the empty partition has the single plate R(1,1)");
  }
  return theta_shift(subdivision(lambda), p);
}

Cell theta_cell(const Partition& lambda, Cell c) {
  const PlateCoord p = plate_of(lambda, c);
  const Shift sh = theta_shift(lambda, p);
  return {c.row - sh.north, c.col - sh.west};
}

LatticeRect theta_image(const Subdivision& s, PlateCoord p) {
  const Shift sh = theta_shift(s, p);
  LatticeRect r = band_rect(s, p);
  r.row_lo -= sh.north;
  r.col_lo -= sh.west;
  if (r.row_hi) *r.row_hi -= sh.north;
  if (r.col_hi) *r.col_hi -= sh.west;
  return r;
}

Extent intersect_extent(const LatticeRect& a, const LatticeRect& b) {
  return {axis_overlap(a.col_lo, a.col_hi, b.col_lo, b.col_hi),
          axis_overlap(a.row_lo, a.row_hi, b.row_lo, b.row_hi)};
}

std::optional<LatticeRect> intersect(const LatticeRect& a, const LatticeRect& b) {
  if (!intersect_extent(a, b).has_cells()) return std::nullopt;
  LatticeRect r;
  r.row_lo = std::max(a.row_lo, b.row_lo);
  r.col_lo = std::max(a.col_lo, b.col_lo);
  auto min_hi = [](std::optional<std::int64_t> u, std::optional<std::int64_t> v) {
    if (!u) return v;
    if (!v) return u;
    return std::optional<std::int64_t>(std::min(*u, *v));
  };
  r.row_hi = min_hi(a.row_hi, b.row_hi);
  r.col_hi = min_hi(a.col_hi, b.col_hi);
  return r;
}

Extent intersection_dims(const Partition& lambda, PlateCoord p, PlateCoord q) {
  if (lambda.empty()) throw precondition_error("the empty partition has a single plate");
  require_thin(lambda);
  const Subdivision s = subdivision(lambda);
  require_plate(s, p);
  require_plate(s, q);
  return {closed_axis(s.x, s.K, p.i, p.j, q.i, q.j),
          closed_axis(s.y, s.K, p.j, p.i, q.j, q.i)};
}

int minimal_box(const Partition& lambda) {
  return lambda.largest() + lambda.length() + std::max(lambda.largest(), lambda.length()) + 1;
}

CoverageReport verify_thin_bijection(const Partition& lambda, int box) {
  if (lambda.empty()) throw precondition_error("tectonic verification needs a non-empty partition");
  require_thin(lambda);
  if (box < minimal_box(lambda)) {
    throw precondition_error("box " + std::to_string(box) + " is too small for (" +
                             lambda.to_string() + "); need at least " +
                             std::to_string(minimal_box(lambda)));
  }
  const Subdivision s = subdivision(lambda);
  const int K = s.K;

  CoverageReport report;
  report.lambda = lambda;
  report.box = box;
  // No shift exceeds largest + length, so cells of [0, safe)^2 only receive
  // preimages from inside the box.
  report.safe = box - (lambda.largest() + lambda.length());
  const int safe = report.safe;
  report.multiplicity.assign(static_cast<std::size_t>(box),
                             std::vector<int>(static_cast<std::size_t>(box), 0));
  auto& grid = report.multiplicity;

  report.type_transport = true;
  for (int r = 0; r < box; ++r) {
    for (int c = lambda.part(r); c < box; ++c) {
      const Cell cell{r, c};
      const PlateCoord p{s.column_band(c), s.row_band(r)};
      const Shift sh = theta_shift(s, p);
      const Cell image{r - sh.north, c - sh.west};
      const HookStats h = hook_stats(lambda, cell, HookSide::external);
      if (image.row < 0 || image.col < 0 || h.arm != image.col || h.leg != image.row) {
        if (report.type_transport) {
          report.problems.push_back("hook type not transported at " + to_string(cell));
        }
        report.type_transport = false;
        continue;
      }
      if (image.row < box && image.col < box) {
        ++grid[static_cast<std::size_t>(image.row)][static_cast<std::size_t>(image.col)];
      }
    }
  }

  report.surjective = true;
  for (int r = 0; r < safe && report.surjective; ++r) {
    for (int c = 0; c < safe; ++c) {
      if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] < 1) {
        report.surjective = false;
        report.problems.push_back("cell " + to_string({r, c}) + " is not covered");
        break;
      }
    }
  }

  std::map<HookType, int> internal_types;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) {
      ++internal_types[type_of(hook_stats(lambda, {r, c}, HookSide::internal))];
    }
  }
  // A cell (r, c) of the image stands for the empty-partition hook of type
  // (arm c, leg r); after one covering layer is removed, what is left must
  // be the internal hook types of lambda.
  report.leftover_matches_internal = true;
  for (int r = 0; r < safe; ++r) {
    for (int c = 0; c < safe; ++c) {
      const int extra = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] - 1;
      auto it = internal_types.find({c, r});
      const int expected = it == internal_types.end() ? 0 : it->second;
      if (extra != expected) {
        report.leftover_matches_internal = false;
        report.problems.push_back("leftover multiplicity " + std::to_string(extra) + " at " +
                                  to_string({r, c}) + " but " + std::to_string(expected) +
                                  " internal hooks of type (" + std::to_string(c) + "," +
                                  std::to_string(r) + ")");
      }
    }
  }

  std::vector<PlateCoord> plates;
  for (int j = 1; j <= K + 1; ++j) {
    for (int i = 1; i <= K + 1; ++i) {
      if (s.is_plate(i, j)) plates.push_back({i, j});
    }
  }
  report.overlaps_allowed = true;
  report.closed_forms_agree = true;
  for (std::size_t a = 0; a < plates.size(); ++a) {
    for (std::size_t b = a + 1; b < plates.size(); ++b) {
      const PlateCoord p = plates[a];
      const PlateCoord q = plates[b];
      PlatePairOverlap pair;
      pair.p = p;
      pair.q = q;
      pair.direct = intersect_extent(theta_image(s, p), theta_image(s, q));
      pair.closed_form = intersection_dims(lambda, p, q);
      const bool same_antidiagonal = p.i + p.j == q.i + q.j;
      const bool adjacent = same_antidiagonal && (p.i - q.i == 1 || q.i - p.i == 1);
      const bool first = p.i + p.j == K + 2 && q.i + q.j == K + 2;
      pair.allowed = adjacent || first;
      if (!extents_agree(pair.direct, pair.closed_form)) {
        report.closed_forms_agree = false;
        report.problems.push_back("closed form disagrees with direct intersection for " +
                                  coord_string(p) + " and " + coord_string(q));
      }
      if (pair.direct.has_cells()) {
        if (!pair.allowed) {
          report.overlaps_allowed = false;
          report.problems.push_back("unexpected overlap of " + coord_string(p) + " and " +
                                    coord_string(q));
        }
        report.plate_pairs.push_back(pair);
      }
    }
  }

  // Tile (i, j) pairs with the plates R(K+1-j, K+2-i) and R(K+2-j, K+1-i);
  // their images meet in a copy of the tile rotated by a half turn.
  report.matching_bijective = true;
  std::vector<std::vector<int>> cover(static_cast<std::size_t>(safe),
                                      std::vector<int>(static_cast<std::size_t>(safe), 0));
  std::map<Cell, int> hits;
  for (int j = 1; j <= K; ++j) {
    for (int i = 1; i + j <= K + 1; ++i) {
      const PlateCoord tile{i, j};
      const PlateCoord p{K + 1 - j, K + 2 - i};
      const PlateCoord q{K + 2 - j, K + 1 - i};
      const auto meet = intersect(theta_image(s, p), theta_image(s, q));
      const LatticeRect tile_rect = band_rect(s, tile);
      const int width = s.x[static_cast<std::size_t>(i - 1)];
      const int height = s.y[static_cast<std::size_t>(j - 1)];
      if (!meet || !meet->row_hi || !meet->col_hi || *meet->col_hi - meet->col_lo != width ||
          *meet->row_hi - meet->row_lo != height) {
        report.matching_bijective = false;
        report.problems.push_back("plates " + coord_string(p) + " and " + coord_string(q) +
                                  " do not meet in a copy of tile " + coord_string(tile));
        continue;
      }
      const int row_extent = s.row_offset(K + 1 - i);
      const int col_extent = s.column_offset(K + 1 - j);
      for (auto r = meet->row_lo; r < *meet->row_hi; ++r) {
        for (auto c = meet->col_lo; c < *meet->col_hi; ++c) {
          const Cell cell{static_cast<int>(r), static_cast<int>(c)};
          const Cell partner{row_extent - 1 - cell.row, col_extent - 1 - cell.col};
          const HookType type{cell.col, cell.row};
          bool ok = tile_rect.contains(partner) && lambda.contains(partner);
          if (ok) ok = type_of(hook_stats(lambda, partner, HookSide::internal)) == type;
          if (!ok) {
            report.matching_bijective = false;
            report.problems.push_back("overlap cell " + to_string(cell) +
                                      " has no type-preserving partner in tile " +
                                      coord_string(tile));
            continue;
          }
          ++hits[partner];
          if (cell.row < safe && cell.col < safe) {
            ++cover[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col)];
          }
          report.overlap_cells.push_back({cell, partner, type, tile});
        }
      }
    }
  }
  if (static_cast<int>(hits.size()) != lambda.size() ||
      std::any_of(hits.begin(), hits.end(), [](const auto& kv) { return kv.second != 1; })) {
    report.matching_bijective = false;
    report.problems.push_back("overlap cells do not hit every internal cell exactly once");
  }
  for (int r = 0; r < safe; ++r) {
    for (int c = 0; c < safe; ++c) {
      const int extra = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] - 1;
      if (cover[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != std::max(extra, 0)) {
        report.matching_bijective = false;
        report.problems.push_back("tile overlaps do not account for multiplicity at " +
                                  to_string({r, c}));
      }
    }
  }
  std::sort(report.overlap_cells.begin(), report.overlap_cells.end(),
            [](const OverlapMatch& a, const OverlapMatch& b) {
              return std::tie(a.cell, a.internal_cell) < std::tie(b.cell, b.internal_cell);
            });

  report.pass = report.type_transport && report.surjective &&
                report.leftover_matches_internal && report.overlaps_allowed &&
                report.closed_forms_agree && report.matching_bijective;
  return report;
}

nlohmann::json CoverageReport::to_json() const {
  auto extent_json = [](const Extent& e) {
    nlohmann::json j;
    j["width"] = e.width ? nlohmann::json(*e.width) : nlohmann::json("inf");
    j["height"] = e.height ? nlohmann::json(*e.height) : nlohmann::json("inf");
    return j;
  };
  nlohmann::json j;
  j["lambda"] = std::vector<int>(lambda.parts().begin(), lambda.parts().end());
  j["box"] = box;
  j["safe"] = safe;
  j["pass"] = pass;
  j["checks"] = {{"type_transport", type_transport},
                 {"surjective", surjective},
                 {"leftover_matches_internal", leftover_matches_internal},
                 {"overlaps_allowed", overlaps_allowed},
                 {"closed_forms_agree", closed_forms_agree},
                 {"matching_bijective", matching_bijective}};
  // each row as [value, run] pairs
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : multiplicity) {
    nlohmann::json runs = nlohmann::json::array();
    std::size_t k = 0;
    while (k < row.size()) {
      std::size_t end = k;
      while (end < row.size() && row[end] == row[k]) ++end;
      runs.push_back({row[k], end - k});
      k = end;
    }
    rows.push_back(std::move(runs));
  }
  j["multiplicity_rle"] = std::move(rows);
  j["overlaps"] = nlohmann::json::array();
  for (const auto& m : overlap_cells) {
    j["overlaps"].push_back({{"cell", {m.cell.row, m.cell.col}},
                             {"internal_cell", {m.internal_cell.row, m.internal_cell.col}},
                             {"arm", m.type.arm},
                             {"leg", m.type.leg},
                             {"tile", {m.tile.i, m.tile.j}}});
  }
  j["plate_pairs"] = nlohmann::json::array();
  for (const auto& p : plate_pairs) {
    j["plate_pairs"].push_back({{"p", {p.p.i, p.p.j}},
                                {"q", {p.q.i, p.q.j}},
                                {"direct", extent_json(p.direct)},
                                {"closed_form", extent_json(p.closed_form)},
                                {"allowed", p.allowed}});
  }
  j["problems"] = problems;
  return j;
}

std::string CoverageReport::heatmap() const {
  std::ostringstream out;
  for (const auto& row : multiplicity) {
    for (int v : row) {
      if (v == 0) {
        out << '.';
      } else if (v > 9) {
        out << '+';
      } else {
        out << static_cast<char>('0' + v);
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hookforge::tectonic

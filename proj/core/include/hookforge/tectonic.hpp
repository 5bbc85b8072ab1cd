#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hookforge/partition.hpp"

namespace hookforge::tectonic {

/// Band coordinates (i = column band west to east, j = row band north to
/// south), both 1-based in 1..K+1.
struct PlateCoord {
  int i = 1;
  int j = 1;

  friend constexpr auto operator<=>(const PlateCoord&, const PlateCoord&) = default;
};

/// Half-open lattice rectangle [row_lo, row_hi) x [col_lo, col_hi); an empty
/// optional bound means +infinity.
struct LatticeRect {
  std::int64_t row_lo = 0;
  std::int64_t col_lo = 0;
  std::optional<std::int64_t> row_hi;
  std::optional<std::int64_t> col_hi;

  bool contains(Cell c) const;
  friend bool operator==(const LatticeRect&, const LatticeRect&) = default;
};

/// Side lengths of a (possibly degenerate or empty) rectangle; nullopt is an
/// unbounded side. Nonpositive values mean measure zero / empty.
struct Extent {
  std::optional<std::int64_t> width;
  std::optional<std::int64_t> height;

  bool has_cells() const {
    return (!width || *width > 0) && (!height || *height > 0);
  }
  friend bool operator==(const Extent&, const Extent&) = default;
};

struct Shift {
  int north = 0;
  int west = 0;
  friend bool operator==(const Shift&, const Shift&) = default;
};

/// Thrown by the thin-only entry points; the message names the failed
/// inequality.
class not_thin_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

/// Plate containing an outside cell.
PlateCoord plate_of(const Partition& lambda, Cell c);

/// Lattice rectangle occupied by a band (tile or plate).
LatticeRect band_rect(const Subdivision& s, PlateCoord p);

/// North shift = height of lambda above the plate (column band i),
/// west shift = width of lambda left of the plate (row band j).
Shift theta_shift(const Partition& lambda, PlateCoord p);
Shift theta_shift(const Subdivision& s, PlateCoord p);

Cell theta_cell(const Partition& lambda, Cell c);

/// Image of a plate under the tectonic movement.
LatticeRect theta_image(const Subdivision& s, PlateCoord p);

/// Direct rectangle intersection dimensions.
Extent intersect_extent(const LatticeRect& a, const LatticeRect& b);
std::optional<LatticeRect> intersect(const LatticeRect& a, const LatticeRect& b);

/// Closed-form width/height of Theta(R_p) ∩ Theta(R_q) valid for thin lambda.
/// Throws not_thin_error otherwise.
Extent intersection_dims(const Partition& lambda, PlateCoord p, PlateCoord q);

/// One cell of the double cover matched to the internal cell whose hook has
/// the same type.
struct OverlapMatch {
  Cell cell;
  Cell internal_cell;
  HookType type;
  PlateCoord tile;
};

struct PlatePairOverlap {
  PlateCoord p;
  PlateCoord q;
  Extent direct;
  Extent closed_form;
  bool allowed = false;  // adjacent on one antidiagonal, or both on the first
};

struct CoverageReport {
  Partition lambda;
  int box = 0;
  int safe = 0;  // multiplicities are exact on [0, safe)^2
  std::vector<std::vector<int>> multiplicity;  // box x box, row-major
  std::vector<OverlapMatch> overlap_cells;
  std::vector<PlatePairOverlap> plate_pairs;

  bool surjective = false;
  bool leftover_matches_internal = false;
  bool overlaps_allowed = false;
  bool closed_forms_agree = false;
  bool matching_bijective = false;
  bool type_transport = false;
  bool pass = false;
  std::vector<std::string> problems;

  nlohmann::json to_json() const;
  /// Digits = multiplicity ('.' for zero, '+' above 9), one line per row.
  std::string heatmap() const;
};

/// Constructive check that Theta is onto, that plates only overlap where
/// allowed, and that the doubly covered cells correspond type-for-type to the
/// internal hooks of lambda. Requires lambda thin and non-empty, and
/// box - (largest + length) > max(largest, length).
CoverageReport verify_thin_bijection(const Partition& lambda, int box);

/// Smallest box accepted by verify_thin_bijection.
int minimal_box(const Partition& lambda);

}  // namespace hookforge::tectonic

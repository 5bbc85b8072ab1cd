#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hookforge {

/// Raised when an operation is called outside its domain (cell inside vs
/// outside a diagram, non-thin shape for a thin-only routine, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A lattice cell in matrix orientation: row grows southward, col eastward.
struct Cell {
  int row = 0;
  int col = 0;

  constexpr int content() const { return col - row; }
  constexpr int cocontent() const { return col + row; }

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell c);

/// Integer partition stored densely, one part per row.
class Partition {
 public:
  Partition() = default;
  /// Throws precondition_error unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Parses "24,11,5,5" (empty string is the empty partition).
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  /// Part in `row` (0-based); zero beyond the last row.
  int part(int row) const {
    return row >= 0 && static_cast<std::size_t>(row) < parts_.size()
               ? parts_[static_cast<std::size_t>(row)]
               : 0;
  }
  /// Number of cells in column `col` (0-based), i.e. the conjugate part.
  int column_length(int col) const;

  int length() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  bool contains(Cell c) const {
    return c.row >= 0 && c.col >= 0 && c.col < part(c.row);
  }

  Partition conjugate() const;

  /// Comma-separated textual form, inverse of parse().
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the parts vector.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline bool contains(const Partition& lambda, Cell c) { return lambda.contains(c); }
inline Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

enum class HookSide { internal, external };

std::string_view to_string(HookSide side);

/// Arm/leg data of the hook attached to one cell.
///
/// Internal hooks point east (arm) and south (leg); external hooks point
/// west and north. The hand ends the arm, the foot ends the leg. The cells of
/// a hook always carry the consecutive contents content_lo..content_hi.
struct HookStats {
  HookSide side = HookSide::internal;
  int arm = 0;
  int leg = 0;
  int hook_len = 1;
  Cell hand;
  Cell foot;
  int content_lo = 0;
  int content_hi = 0;

  friend bool operator==(const HookStats&, const HookStats&) = default;
};

/// (arm, leg) pair.
struct HookType {
  int arm = 0;
  int leg = 0;

  int length() const { return arm + leg + 1; }
  friend constexpr auto operator<=>(const HookType&, const HookType&) = default;
};

inline HookType type_of(const HookStats& h) { return {h.arm, h.leg}; }

/// Hook of `c` with respect to `lambda`. Internal hooks require c in lambda,
/// external hooks require c outside it; a mismatch throws precondition_error.
HookStats hook_stats(const Partition& lambda, Cell c, HookSide side);

/// Cells of the hook, listed from the hand through the corner to the foot.
std::vector<Cell> hook_cells(const HookStats& h, Cell corner);

/// Streams the partitions of d in reverse-lexicographic order of parts,
/// starting from (d) and ending at (1,...,1).
class PartitionStream {
 public:
  explicit PartitionStream(int d);
  std::optional<Partition> next();

 private:
  std::vector<int> current_;
  bool done_ = false;
  bool started_ = false;
};

std::vector<Partition> partitions_of(int d);
/// All partitions with size 0..max_size, grouped by size.
std::vector<Partition> partitions_up_to(int max_size);
/// Number of partitions of d, computed by Euler's recurrence.
std::int64_t partition_count(int d);

/// Band structure induced by the distinct parts.
///
/// x lists column-band widths west to east (x[0] is the smallest distinct
/// part); y lists row-band heights north to south (y[0] is the multiplicity
/// of the largest part). Band (i, j), 1-based, is a tile when
/// i + j <= K + 1 and a plate otherwise.
struct Subdivision {
  int K = 0;
  std::vector<int> x;
  std::vector<int> y;

  /// x_1 + ... + x_m (0 for m = 0).
  int column_offset(int m) const;
  /// y_1 + ... + y_m (0 for m = 0).
  int row_offset(int m) const;
  /// 1-based band of a column / row; bands K + 1 are semi-infinite.
  int column_band(int col) const;
  int row_band(int row) const;

  bool is_tile(int i, int j) const { return i + j <= K + 1; }
  bool is_plate(int i, int j) const { return i + j >= K + 2; }
  int tile_count() const { return K * (K + 1) / 2; }
  int plate_count() const { return (K + 1) * (K + 2) / 2; }

  friend bool operator==(const Subdivision&, const Subdivision&) = default;
};

/// Throws precondition_error for the empty partition.
Subdivision subdivision(const Partition& lambda);

/// Describes the first violated thinness inequality, if any.
struct ThinnessWitness {
  bool thin = true;
  std::string failure;
};

ThinnessWitness check_thin(const Partition& lambda);
inline bool is_thin(const Partition& lambda) { return check_thin(lambda).thin; }

}  // namespace hookforge

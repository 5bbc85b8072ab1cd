#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hookforge/partition.hpp"

namespace hookforge::pp {

enum class FillingSide { rpp, spp };

/// A reverse plane partition (entries on the cells of `shape`, weakly
/// increasing along rows and columns) or a skew plane partition (finitely
/// many entries outside `shape`, weakly decreasing toward the south-east).
/// Zero entries are not stored.
struct Filling {
  Partition shape;
  FillingSide side = FillingSide::rpp;
  std::map<Cell, int> entries;
  int size = 0;

  int at(Cell c) const {
    auto it = entries.find(c);
    return it == entries.end() ? 0 : it->second;
  }
  void set(Cell c, int value);

  friend bool operator==(const Filling&, const Filling&) = default;
};

nlohmann::json to_json(const Filling& f);

/// Checks support and monotonicity.
bool is_valid(const Filling& f);

using FillingVisitor = std::function<void(const Filling&)>;

/// Visits every RPP of shape lambda with size <= max_size exactly once, in
/// lexicographic order of the row-major entry vector.
void for_each_rpp(const Partition& lambda, int max_size, const FillingVisitor& visit);
std::vector<Filling> rpp_enumerate(const Partition& lambda, int max_size);

/// Outside cells that can carry a nonzero entry in an SPP of size <= max_size:
/// a nonzero entry at (i, j) forces nonzero entries at every outside cell of
/// [0, i] x [0, j], so at most max_size such cells may exist.
std::vector<Cell> spp_support_window(const Partition& lambda, int max_size);

/// Visits every SPP of shape lambda with size <= max_size exactly once.
void for_each_spp(const Partition& lambda, int max_size, const FillingVisitor& visit);
std::vector<Filling> spp_enumerate(const Partition& lambda, int max_size);

/// Hook multiplicities n(cell) of the Hillman-Grassl decomposition.
struct HookMultiplicity {
  Partition shape;
  std::map<Cell, int> mult;  // zero multiplicities omitted

  int at(Cell c) const {
    auto it = mult.find(c);
    return it == mult.end() ? 0 : it->second;
  }
  /// Sum of mult * hook length.
  int weight() const;

  friend bool operator==(const HookMultiplicity&, const HookMultiplicity&) = default;
};

/// Hillman-Grassl: repeatedly peel the zigzag path that starts at the bottom
/// of the leftmost nonzero column, climbs while the entry above is equal and
/// otherwise steps east, ending at the end of a row; each path is recorded as
/// the hook at (end row, start column).
HookMultiplicity hg_decompose(const Filling& f);
/// Inverse of hg_decompose.
Filling hg_compose(const HookMultiplicity& m);

struct RefinedWeight {
  int q_exponent = 0;
  int t_exponent = 0;
  friend bool operator==(const RefinedWeight&, const RefinedWeight&) = default;
};

/// q exponent = size; t exponent = sum of mult * (leg - arm - 1).
RefinedWeight refined_weight(const Filling& f);

/// Half-turn complement of lambda in the n x n box. Throws
/// precondition_error when lambda does not fit.
Partition dualize(const Partition& lambda, int n);

/// SPP of lambda supported in the n x n box -> RPP of dualize(lambda, n).
Filling spp_to_dual_rpp(const Filling& spp, int n);

}  // namespace hookforge::pp

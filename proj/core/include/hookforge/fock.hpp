#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hookforge/partition.hpp"
#include "hookforge/series.hpp"

namespace hookforge::fock {

/// Exact half-integer, stored as twice its value.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_int(int n) { return {2 * n}; }
  /// The position n + 1/2.
  static constexpr HalfInt position(int n) { return {2 * n + 1}; }

  bool is_integer() const { return twice % 2 == 0; }
  /// For a position n + 1/2, returns n.
  int floor() const { return twice >= 0 ? twice / 2 : -((-twice + 1) / 2); }
  std::string to_string() const;

  HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
  HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
  HalfInt& operator+=(HalfInt o) {
    twice += o.twice;
    return *this;
  }
  friend bool operator==(HalfInt, HalfInt) = default;
  friend auto operator<=>(HalfInt, HalfInt) = default;
};

/// Basis vector of the semi-infinite wedge: occupied positions
/// shape_k - k + 1/2 + charge for k >= 1.
struct MayaState {
  int charge = 0;
  Partition shape;

  static MayaState vacuum() { return {}; }
  bool occupied(HalfInt position) const;
  /// Occupied positions above the all-occupied tail, descending, together
  /// with the highest position of that tail.
  std::vector<HalfInt> explicit_positions() const;
  HalfInt tail_top() const;

  friend bool operator==(const MayaState&, const MayaState&) = default;
  friend auto operator<=>(const MayaState& a, const MayaState& b) {
    if (auto c = a.charge <=> b.charge; c != 0) return c;
    return a.shape <=> b.shape;
  }
};

using series::Coeff;
using series::ContentMonomial;
using series::Polynomial;

/// Finite linear combination of basis states with polynomial coefficients in
/// the content variables. Untwisted operators only produce integer multiples
/// of the unit monomial.
class FockVector {
 public:
  FockVector() = default;
  static FockVector basis(const MayaState& s);

  void add(const MayaState& s, const Polynomial& coefficient);
  const std::map<MayaState, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(const MayaState& s) const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  FockVector scaled(const Coeff& c) const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  std::map<MayaState, Polynomial> terms_;
};

/// Bilinear pairing with the basis orthonormal.
Polynomial inner(const FockVector& a, const FockVector& b);

/// Inserts position k; sign (-1)^(occupied positions above k).
FockVector apply_psi(HalfInt k, const FockVector& v);
/// Removes position k with the same sign; adjoint of apply_psi.
FockVector apply_psi_star(HalfInt k, const FockVector& v);
/// :psi_i psi*_j: = psi_i psi*_j for j > 0, and -psi*_j psi_i otherwise.
FockVector normal_ordered_pair(HalfInt i, HalfInt j, const FockVector& v);

/// Positions k where :psi_{k-shift} psi*_k: can act nontrivially on s.
std::vector<HalfInt> operator_window(const MayaState& s, int shift);

/// Eigenvalue of the sum of :psi_k psi*_k: (the charge operator), from the
/// window sum.
int charge_eigenvalue(const MayaState& s);
/// Eigenvalue of the sum of k :psi_k psi*_k: from the window sum; equals
/// |shape| + charge^2 / 2.
HalfInt energy(const MayaState& s);

/// Free boson: sum over k of :psi_{k-E} psi*_k:, through the fermionic
/// bilinears. Throws for E = 0.
FockVector alpha(int E, const FockVector& v);
/// The same operator through bead moves with the Murnaghan-Nakayama sign
/// (-1)^(beads strictly between old and new position).
FockVector alpha_bead(int E, const FockVector& v);
/// Twisted boson: the bead moves of alpha with coefficient the product of
/// q_c over the contents c of the moved border strip, sign dropped.
FockVector alpha_twisted(int E, const FockVector& v);

struct MatrixElement {
  Partition from;
  Partition to;
  ContentMonomial monomial;
  Coeff coefficient;
};

struct FockReport {
  int d = 0;
  int ell = 0;
  bool pass = false;
  Polynomial removal_side;    // sum of <mu| twisted alpha(ell) |lambda>
  Polynomial insertion_side;  // sum of <lambda| twisted alpha(-ell) |mu>
  std::vector<MatrixElement> removals;
  std::vector<MatrixElement> insertions;
  bool sides_equal = false;
  bool removals_match_internal_hooks = false;
  bool insertions_match_external_hooks = false;
  bool matrix_elements_monomial = false;

  nlohmann::json to_json() const;
  /// "lambda<TAB>mu<TAB>monomial" lines for one direction.
  static std::string table_tsv(const std::vector<MatrixElement>& elements);
};

/// Compares the removal and insertion sides over partitions of d and d - ell,
/// and each side against the content monomials of internal hooks of length
/// ell on partitions of d, resp. external hooks on partitions of d - ell.
/// Throws precondition_error unless d >= ell >= 1.
FockReport verify_fock_identity(int d, int ell);

}  // namespace hookforge::fock

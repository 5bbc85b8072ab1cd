#include "hookforge/fock.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hookforge/hook_strip.hpp"

namespace hookforge::fock {

namespace {

// Occupied positions in n-units (n stands for n + 1/2): explicit beads in
// descending order above `floor`, everything at or below `floor` occupied.
// Invariant: floor + beads.size() + 1 == charge.
struct Sea {
  std::vector<int> beads;
  int floor = -1;
  int charge = 0;

  explicit Sea(const MayaState& s) : charge(s.charge) {
    const int len = s.shape.length();
    for (int k = 1; k <= len; ++k) beads.push_back(s.shape.part(k - 1) - k + s.charge);
    floor = s.charge - len - 1;
  }

  // Makes every position >= n explicit.
  void extend_to(int n) {
    while (floor >= n) beads.push_back(floor--);
  }

  bool occupied(int n) const {
    return n <= floor || std::find(beads.begin(), beads.end(), n) != beads.end();
  }

  int count_above(int n) const {
    return static_cast<int>(std::count_if(beads.begin(), beads.end(), [n](int b) { return b > n; }));
  }

  int count_between(int a, int b) const {
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    int inside = static_cast<int>(
        std::count_if(beads.begin(), beads.end(), [&](int x) { return x > lo && x < hi; }));
    if (floor > lo) inside += std::min(floor, hi - 1) - lo;
    return inside;
  }

  void insert(int n) {
    beads.push_back(n);
    std::sort(beads.begin(), beads.end(), std::greater<>());
    ++charge;
  }

  void erase(int n) {
    beads.erase(std::find(beads.begin(), beads.end(), n));
    --charge;
  }

  void move(int from, int to) {
    *std::find(beads.begin(), beads.end(), from) = to;
    std::sort(beads.begin(), beads.end(), std::greater<>());
  }

  MayaState state() const {
    std::vector<int> parts;
    for (std::size_t k = 0; k < beads.size(); ++k) {
      const int p = beads[k] + static_cast<int>(k) + 1 - charge;
      if (p < 0) throw std::logic_error("Maya diagram lost its partition shape");
      if (p == 0) break;
      parts.push_back(p);
    }
    return {charge, Partition(std::move(parts))};
  }
};

int position_index(HalfInt k) {
  if (k.is_integer()) {
    throw precondition_error("fermion positions are half-integers (got " + k.to_string() + ")");
  }
  return k.floor();
}

Polynomial unit_times(const Coeff& c) { return Polynomial::monomial(ContentMonomial{}, c); }

// Applies a basis-level map termwise, multiplying coefficients.
FockVector lift(const FockVector& v, const std::function<FockVector(const MayaState&)>& on_basis) {
  FockVector out;
  for (const auto& [state, coeff] : v.terms()) {
    const FockVector images = on_basis(state);
    for (const auto& [image, c] : images.terms()) out.add(image, coeff * c);
  }
  return out;
}

using MoveVisitor = std::function<void(const MayaState& image, int sign, int content_lo, int content_hi)>;

// Every move of one bead by E places downward (E > 0, a strip leaves) or
// -E places upward (E < 0, a strip arrives) onto an empty position.
void for_each_bead_move(int E, const MayaState& s, const MoveVisitor& visit) {
  if (E == 0) throw precondition_error("boson energy must be nonzero");
  Sea sea(s);
  sea.extend_to(sea.floor - std::abs(E) + 1);
  const std::vector<int> beads = sea.beads;
  for (const int from : beads) {
    const int to = from - E;
    if (sea.occupied(to)) continue;
    Sea moved = sea;
    moved.move(from, to);
    const int sign = sea.count_between(from, to) % 2 == 0 ? 1 : -1;
    visit(moved.state(), sign, std::min(from, to) + 1 - s.charge, std::max(from, to) - s.charge);
  }
}

}  // namespace

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

bool MayaState::occupied(HalfInt position) const { return Sea(*this).occupied(position_index(position)); }

std::vector<HalfInt> MayaState::explicit_positions() const {
  std::vector<HalfInt> out;
  for (const int n : Sea(*this).beads) out.push_back(HalfInt::position(n));
  return out;
}

HalfInt MayaState::tail_top() const { return HalfInt::position(Sea(*this).floor); }

FockVector FockVector::basis(const MayaState& s) {
  FockVector v;
  v.add(s, Polynomial::one());
  return v;
}

void FockVector::add(const MayaState& s, const Polynomial& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial FockVector::coefficient(const MayaState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Polynomial() : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, Polynomial() - c);
  return *this;
}

FockVector FockVector::scaled(const Coeff& c) const {
  FockVector out;
  for (const auto& [s, p] : terms_) out.add(s, p * unit_times(c));
  return out;
}

Polynomial inner(const FockVector& a, const FockVector& b) {
  Polynomial out;
  for (const auto& [s, c] : a.terms()) {
    auto it = b.terms().find(s);
    if (it != b.terms().end()) out += c * it->second;
  }
  return out;
}

FockVector apply_psi(HalfInt k, const FockVector& v) {
  const int n = position_index(k);
  return lift(v, [n](const MayaState& s) {
    Sea sea(s);
    sea.extend_to(n);
    if (sea.occupied(n)) return FockVector();
    const int sign = sea.count_above(n) % 2 == 0 ? 1 : -1;
    sea.insert(n);
    return FockVector::basis(sea.state()).scaled(sign);
  });
}

FockVector apply_psi_star(HalfInt k, const FockVector& v) {
  const int n = position_index(k);
  return lift(v, [n](const MayaState& s) {
    Sea sea(s);
    sea.extend_to(n);
    if (!sea.occupied(n)) return FockVector();
    const int sign = sea.count_above(n) % 2 == 0 ? 1 : -1;
    sea.erase(n);
    return FockVector::basis(sea.state()).scaled(sign);
  });
}

FockVector normal_ordered_pair(HalfInt i, HalfInt j, const FockVector& v) {
  if (j.twice > 0) return apply_psi(i, apply_psi_star(j, v));
  return apply_psi_star(j, apply_psi(i, v)).scaled(-1);
}

std::vector<HalfInt> operator_window(const MayaState& s, int shift) {
  const Sea sea(s);
  const int top = sea.beads.empty() ? sea.floor : sea.beads.front();
  const int reach = std::abs(shift) + 1;
  std::vector<HalfInt> out;
  for (int n = std::min(sea.floor, -1) - reach; n <= std::max(top, 0) + reach; ++n) {
    out.push_back(HalfInt::position(n));
  }
  return out;
}

namespace {

// Scalar c with sum_k weight(k) :psi_k psi*_k: s = c s.
Coeff diagonal_sum(const MayaState& s, const std::function<int(HalfInt)>& weight) {
  FockVector acc;
  const FockVector v = FockVector::basis(s);
  for (const HalfInt k : operator_window(s, 0)) {
    acc += normal_ordered_pair(k, k, v).scaled(weight(k));
  }
  if (acc.terms().size() > 1 || (!acc.is_zero() && !(acc.terms().begin()->first == s))) {
    throw std::logic_error("diagonal operator moved a basis state");
  }
  return acc.coefficient(s).coefficient(ContentMonomial{});
}

}  // namespace

int charge_eigenvalue(const MayaState& s) {
  return static_cast<int>(diagonal_sum(s, [](HalfInt) { return 1; }));
}

HalfInt energy(const MayaState& s) {
  // weight 2k keeps the sum integral
  return {static_cast<int>(diagonal_sum(s, [](HalfInt k) { return k.twice; }))};
}

FockVector alpha(int E, const FockVector& v) {
  if (E == 0) throw precondition_error("boson energy must be nonzero");
  return lift(v, [E](const MayaState& s) {
    FockVector out;
    const FockVector b = FockVector::basis(s);
    for (const HalfInt k : operator_window(s, E)) {
      out += normal_ordered_pair(k - HalfInt::from_int(E), k, b);
    }
    return out;
  });
}

FockVector alpha_bead(int E, const FockVector& v) {
  return lift(v, [E](const MayaState& s) {
    FockVector out;
    for_each_bead_move(E, s, [&](const MayaState& image, int sign, int, int) {
      out.add(image, unit_times(sign));
    });
    return out;
  });
}

FockVector alpha_twisted(int E, const FockVector& v) {
  return lift(v, [E](const MayaState& s) {
    FockVector out;
    for_each_bead_move(E, s, [&](const MayaState& image, int, int lo, int hi) {
      out.add(image, Polynomial::monomial(ContentMonomial::interval(lo, hi)));
    });
    return out;
  });
}

std::string FockReport::table_tsv(const std::vector<MatrixElement>& elements) {
  std::string out;
  for (const auto& e : elements) {
    out += "(" + e.from.to_string() + ")\t(" + e.to.to_string() + ")\t" + e.monomial.to_string();
    if (e.coefficient != 1) out += "\t" + e.coefficient.str();
    out += '\n';
  }
  return out;
}

nlohmann::json FockReport::to_json() const {
  auto poly_json = [](const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({m.to_string(), c.str()});
    return terms;
  };
  return {{"d", d},
          {"ell", ell},
          {"pass", pass},
          {"checks",
           {{"sides_equal", sides_equal},
            {"removals_match_internal_hooks", removals_match_internal_hooks},
            {"insertions_match_external_hooks", insertions_match_external_hooks},
            {"matrix_elements_monomial", matrix_elements_monomial}}},
          {"removal_side", poly_json(removal_side)},
          {"insertion_side", poly_json(insertion_side)},
          {"removal_count", removals.size()},
          {"insertion_count", insertions.size()}};
}

FockReport verify_fock_identity(int d, int ell) {
  if (ell < 1 || d < ell) {
    throw precondition_error("Fock identity needs d >= ell >= 1 (got d=" + std::to_string(d) +
                             ", ell=" + std::to_string(ell) + ")");
  }
  FockReport r;
  r.d = d;
  r.ell = ell;
  r.matrix_elements_monomial = true;

  auto collect = [&](int from_size, int E, std::vector<MatrixElement>& table, Polynomial& side) {
    for (const auto& lambda : partitions_of(from_size)) {
      const FockVector image = alpha_twisted(E, FockVector::basis({0, lambda}));
      for (const auto& [state, poly] : image.terms()) {
        if (poly.terms().size() != 1 || poly.terms().begin()->second != 1) {
          r.matrix_elements_monomial = false;
        }
        for (const auto& [m, c] : poly.terms()) table.push_back({lambda, state.shape, m, c});
        side += poly;
      }
    }
  };
  collect(d, ell, r.removals, r.removal_side);
  collect(d - ell, -ell, r.insertions, r.insertion_side);

  Polynomial internal;
  for (const auto& h : strip::enumerate_S(d, ell)) {
    internal.add_term(series::hook_monomial(h.lambda, h.cell, h.side), 1);
  }
  Polynomial external;
  for (const auto& h : strip::enumerate_Sprime(d - ell, ell)) {
    external.add_term(series::hook_monomial(h.lambda, h.cell, h.side), 1);
  }
  r.sides_equal = r.removal_side == r.insertion_side;
  r.removals_match_internal_hooks = r.removal_side == internal;
  r.insertions_match_external_hooks = r.insertion_side == external;
  r.pass = r.sides_equal && r.removals_match_internal_hooks && r.insertions_match_external_hooks &&
           r.matrix_elements_monomial;
  return r;
}

}  // namespace hookforge::fock

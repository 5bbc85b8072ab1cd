#pragma once

#include <compare>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hookforge/partition.hpp"

namespace hookforge::series {

using Coeff = boost::multiprecision::cpp_int;

inline constexpr int kNoCap = std::numeric_limits<int>::max();

/// Monomial in the content variables q_k, k in Z. Stored as (index, exponent)
/// pairs sorted by index with positive exponents.
class ContentMonomial {
 public:
  ContentMonomial() = default;
  static ContentMonomial var(int index, int exponent = 1);
  /// q_lo q_{lo+1} ... q_hi.
  static ContentMonomial interval(int lo, int hi);

  int degree() const { return degree_; }
  bool is_unit() const { return exps_.empty(); }
  int exponent(int index) const;
  const std::vector<std::pair<int, int>>& exps() const { return exps_; }

  ContentMonomial operator*(const ContentMonomial& other) const;
  /// Prints as q[-1]^2*q[0]; the unit prints as 1.
  std::string to_string() const;

  friend bool operator==(const ContentMonomial&, const ContentMonomial&) = default;
  friend std::strong_ordering operator<=>(const ContentMonomial& a, const ContentMonomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<std::pair<int, int>> exps_;
  int degree_ = 0;
};

/// x^x y^y, graded by x + y.
struct XYMonomial {
  int x = 0;
  int y = 0;

  int degree() const { return x + y; }
  XYMonomial operator*(const XYMonomial& o) const { return {x + o.x, y + o.y}; }
  std::string to_string() const;

  friend bool operator==(const XYMonomial&, const XYMonomial&) = default;
  friend std::strong_ordering operator<=>(const XYMonomial& a, const XYMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return b.x <=> a.x;
  }
};

/// q^q t^t, graded by q only; t may be negative.
struct QTMonomial {
  int q = 0;
  int t = 0;

  int degree() const { return q; }
  QTMonomial operator*(const QTMonomial& o) const { return {q + o.q, t + o.t}; }
  std::string to_string() const;

  friend bool operator==(const QTMonomial&, const QTMonomial&) = default;
  friend auto operator<=>(const QTMonomial&, const QTMonomial&) = default;
};

/// q^q in one variable.
struct QMonomial {
  int q = 0;

  int degree() const { return q; }
  QMonomial operator*(const QMonomial& o) const { return {q + o.q}; }
  std::string to_string() const;

  friend bool operator==(const QMonomial&, const QMonomial&) = default;
  friend auto operator<=>(const QMonomial&, const QMonomial&) = default;
};

/// Sparse power series truncated at total degree `cap`. Terms above the cap
/// and zero coefficients are never stored. Map order is degree-first, which
/// multiply_geometric relies on.
template <class Mono>
class Series {
 public:
  using Terms = std::map<Mono, Coeff>;

  explicit Series(int cap = kNoCap) : cap_(cap) {
    if (cap < 0) throw precondition_error("series cap must be nonnegative");
  }
  static Series one(int cap = kNoCap) {
    Series s(cap);
    s.add_term(Mono{}, 1);
    return s;
  }
  static Series monomial(const Mono& m, Coeff c = 1, int cap = kNoCap) {
    Series s(cap);
    s.add_term(m, std::move(c));
    return s;
  }

  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Mono& m, const Coeff& c) {
    if (m.degree() > cap_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Series& operator+=(const Series& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  /// Product truncated at min of the two caps.
  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.cap_, b.cap_));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma.degree() + mb.degree() > out.cap_) break;  // degree-first order
        out.add_term(ma * mb, ca * cb);
      }
    }
    return out;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series truncated(int new_cap) const {
    Series out(std::min(new_cap, cap_));
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
  }

  /// Multiplies in place by 1/(1 - m) = sum of m^k. Throws for the unit.
  void multiply_geometric(const Mono& m) {
    if (m.degree() < 1) throw precondition_error("geometric series of a degree-0 monomial diverges");
    if (m.degree() > cap_) return;
    // Ascending degree order: each term is final by the time it is visited,
    // and its shift by m lands later in the map.
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->first.degree() + m.degree() > cap_) continue;
      if (it->second == 0) continue;
      terms_[it->first * m] += it->second;
    }
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  }

  /// Coefficient sums by degree, indices 0..cap (cap must be finite).
  std::vector<Coeff> graded_totals() const {
    std::vector<Coeff> out(static_cast<std::size_t>(cap_) + 1, Coeff(0));
    for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(m.degree())] += c;
    return out;
  }

  /// Sorted TSV lines "monomial<TAB>coefficient\n".
  std::string to_tsv() const {
    std::string out;
    for (const auto& [m, c] : terms_) {
      out += m.to_string();
      out += '\t';
      out += c.str();
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

 private:
  int cap_;
  Terms terms_;
};

using TruncSeries = Series<ContentMonomial>;
using Polynomial = Series<ContentMonomial>;  // uncapped
using BivarSeries = Series<XYMonomial>;
using QTSeries = Series<QTMonomial>;
using QSeries = Series<QMonomial>;

/// Sum of m^k for k >= 0 up to the cap.
template <class Mono>
Series<Mono> geom_expand(const Mono& m, int cap) {
  auto s = Series<Mono>::one(cap);
  s.multiply_geometric(m);
  return s;
}

/// Product of 1/(1 - m) over the given monomials; factors above the cap are 1.
template <class Mono>
Series<Mono> product_of_geometric(const std::vector<Mono>& factors, int cap) {
  auto s = Series<Mono>::one(cap);
  for (const auto& m : factors) s.multiply_geometric(m);
  return s;
}

template <class Mono>
Series<Mono> pow(const Series<Mono>& base, int exponent) {
  if (exponent < 0) throw precondition_error("negative series power");
  auto out = Series<Mono>::one(base.cap());
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

/// Product of q_content over the cells of the hook at `cell`.
ContentMonomial hook_monomial(const Partition& lambda, Cell cell, HookSide side);

/// x^(arm+1) y^leg.
XYMonomial hook_xy(const HookStats& h);

}  // namespace hookforge::series

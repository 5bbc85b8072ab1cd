#include "hookforge/series.hpp"

#include <algorithm>

namespace hookforge::series {

ContentMonomial ContentMonomial::var(int index, int exponent) {
  ContentMonomial m;
  if (exponent < 0) throw precondition_error("negative exponent in a content monomial");
  if (exponent > 0) {
    m.exps_.emplace_back(index, exponent);
    m.degree_ = exponent;
  }
  return m;
}

ContentMonomial ContentMonomial::interval(int lo, int hi) {
  ContentMonomial m;
  for (int k = lo; k <= hi; ++k) m.exps_.emplace_back(k, 1);
  m.degree_ = std::max(0, hi - lo + 1);
  return m;
}

int ContentMonomial::exponent(int index) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), std::pair{index, 0});
  return it != exps_.end() && it->first == index ? it->second : 0;
}

ContentMonomial ContentMonomial::operator*(const ContentMonomial& other) const {
  ContentMonomial out;
  out.exps_.reserve(exps_.size() + other.exps_.size());
  auto a = exps_.begin();
  auto b = other.exps_.begin();
  while (a != exps_.end() || b != other.exps_.end()) {
    if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      out.exps_.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      out.exps_.push_back(*b++);
    } else {
      out.exps_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::string ContentMonomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [k, e] : exps_) {
    if (!out.empty()) out += '*';
    out += "q[" + std::to_string(k) + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

std::string power(const char* var, int e) {
  if (e == 0) return {};
  return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
}

std::string join_powers(std::string a, const std::string& b) {
  if (a.empty()) return b.empty() ? "1" : b;
  if (!b.empty()) a += "*" + b;
  return a;
}

}  // namespace

std::string XYMonomial::to_string() const { return join_powers(power("x", x), power("y", y)); }

std::string QTMonomial::to_string() const { return join_powers(power("q", q), power("t", t)); }

std::string QMonomial::to_string() const { return join_powers(power("q", q), ""); }

ContentMonomial hook_monomial(const Partition& lambda, Cell cell, HookSide side) {
  const HookStats h = hook_stats(lambda, cell, side);
  ContentMonomial m;
  for (const Cell c : hook_cells(h, cell)) m = m * ContentMonomial::var(c.content());
  return m;
}

XYMonomial hook_xy(const HookStats& h) { return {h.arm + 1, h.leg}; }

}  // namespace hookforge::series

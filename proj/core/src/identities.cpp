#include "hookforge/identities.hpp"

#include "hookforge/hook_census.hpp"
#include "hookforge/hook_strip.hpp"
#include "hookforge/plane_partitions.hpp"

namespace hookforge::series {

namespace {

nlohmann::json parts_json(const Partition& lambda) {
  return std::vector<int>(lambda.parts().begin(), lambda.parts().end());
}

void require_cap(int cap) {
  if (cap < 0) throw precondition_error("cap must be nonnegative (got " + std::to_string(cap) + ")");
}

template <class Mono>
void compare(IdentityReport& report, const std::string& form, const Series<Mono>& lhs,
             const Series<Mono>& rhs) {
  report.lhs_terms += lhs.terms().size();
  report.rhs_terms += rhs.terms().size();
  auto note = [&](const Mono& m, const Coeff& a, const Coeff& b) {
    ++report.mismatch_count;
    if (report.mismatches.size() < IdentityReport::kListedMismatches) {
      report.mismatches.push_back({form, m.to_string(), a.str(), b.str()});
    }
  };
  for (const auto& [m, c] : lhs.terms()) {
    const Coeff other = rhs.coefficient(m);
    if (other != c) note(m, c, other);
  }
  for (const auto& [m, c] : rhs.terms()) {
    if (lhs.terms().count(m) == 0) note(m, Coeff(0), c);
  }
}

ContentMonomial filling_monomial(const pp::Filling& f) {
  ContentMonomial m;
  for (const auto& [cell, v] : f.entries) m = m * ContentMonomial::var(cell.content(), v);
  return m;
}

std::vector<XYMonomial> xy_factors(const std::vector<census::HookAt>& hooks, int cap) {
  std::vector<XYMonomial> out;
  for (const auto& h : hooks) {
    if (h.stats.hook_len <= cap) out.push_back(hook_xy(h.stats));
  }
  return out;
}

std::vector<QMonomial> q_factors(const std::vector<census::HookAt>& hooks, int cap) {
  std::vector<QMonomial> out;
  for (const auto& h : hooks) {
    if (h.stats.hook_len <= cap) out.push_back({h.stats.hook_len});
  }
  return out;
}

}  // namespace

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json j;
  j["identity"] = identity;
  j["input"] = input;
  j["pass"] = pass;
  j["lhs_terms"] = lhs_terms;
  j["rhs_terms"] = rhs_terms;
  j["mismatch_count"] = mismatch_count;
  j["mismatches"] = nlohmann::json::array();
  for (const auto& m : mismatches) {
    j["mismatches"].push_back(
        {{"form", m.form}, {"monomial", m.monomial}, {"lhs", m.lhs}, {"rhs", m.rhs}});
  }
  j["details"] = details;
  return j;
}

TruncSeries rpp_weight_sum(const Partition& lambda, int cap) {
  require_cap(cap);
  TruncSeries s(cap);
  pp::for_each_rpp(lambda, cap, [&](const pp::Filling& f) { s.add_term(filling_monomial(f), 1); });
  return s;
}

TruncSeries spp_weight_sum(const Partition& lambda, int cap) {
  require_cap(cap);
  TruncSeries s(cap);
  pp::for_each_spp(lambda, cap, [&](const pp::Filling& f) { s.add_term(filling_monomial(f), 1); });
  return s;
}

TruncSeries internal_hook_product(const Partition& lambda, int cap) {
  require_cap(cap);
  std::vector<ContentMonomial> factors;
  for (const auto& h : census::internal_hooks(lambda)) {
    factors.push_back(hook_monomial(lambda, h.cell, HookSide::internal));
  }
  return product_of_geometric(factors, cap);
}

TruncSeries external_hook_product(const Partition& lambda, int cap) {
  require_cap(cap);
  std::vector<ContentMonomial> factors;
  for (const auto& h : census::external_hooks_up_to(lambda, cap)) {
    factors.push_back(hook_monomial(lambda, h.cell, HookSide::external));
  }
  return product_of_geometric(factors, cap);
}

IdentityReport verify_gansner(const Partition& lambda, int cap) {
  IdentityReport r;
  r.identity = "gansner";
  r.input = {{"lambda", parts_json(lambda)}, {"cap", cap}};
  compare(r, "content", rpp_weight_sum(lambda, cap), internal_hook_product(lambda, cap));
  r.pass = r.mismatch_count == 0;
  return r;
}

IdentityReport verify_skew(const Partition& lambda, int cap) {
  IdentityReport r;
  r.identity = "skew";
  r.input = {{"lambda", parts_json(lambda)}, {"cap", cap}};
  const TruncSeries lhs = spp_weight_sum(lambda, cap);
  compare(r, "content", lhs, external_hook_product(lambda, cap));
  if (lambda.empty()) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& c : lhs.graded_totals()) counts.push_back(c.str());
    r.details["graded_counts"] = counts;
  }
  r.pass = r.mismatch_count == 0;
  return r;
}

IdentityReport verify_wallcrossing(const Partition& lambda, int cap) {
  require_cap(cap);
  IdentityReport r;
  r.identity = "wallcross";
  r.input = {{"lambda", parts_json(lambda)}, {"cap", cap}};
  const auto external = census::external_hooks_up_to(lambda, cap);
  const auto external_empty = census::external_hooks_up_to(Partition{}, cap);
  const auto internal = census::internal_hooks(lambda);

  const BivarSeries lhs = product_of_geometric(xy_factors(external, cap), cap);
  const BivarSeries rhs = product_of_geometric(xy_factors(external_empty, cap), cap) *
                          product_of_geometric(xy_factors(internal, cap), cap);
  compare(r, "xy", lhs, rhs);

  const std::size_t before = r.mismatch_count;
  const QSeries lhs_q = product_of_geometric(q_factors(external, cap), cap);
  const QSeries rhs_q = product_of_geometric(q_factors(external_empty, cap), cap) *
                        product_of_geometric(q_factors(internal, cap), cap);
  compare(r, "x=y=q", lhs_q, rhs_q);
  r.details["specialization_pass"] = r.mismatch_count == before;
  r.pass = r.mismatch_count == 0;
  return r;
}

IdentityReport verify_refined_rpp(const Partition& lambda, int cap) {
  require_cap(cap);
  IdentityReport r;
  r.identity = "refined-rpp";
  r.input = {{"lambda", parts_json(lambda)}, {"cap", cap}};
  QTSeries lhs(cap);
  std::size_t count = 0;
  std::size_t round_trip_failures = 0;
  pp::for_each_rpp(lambda, cap, [&](const pp::Filling& f) {
    ++count;
    const pp::HookMultiplicity m = pp::hg_decompose(f);
    bool ok = m.weight() == f.size;
    try {
      ok = ok && pp::hg_compose(m) == f;
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++round_trip_failures;
    const pp::RefinedWeight w = pp::refined_weight(f);
    lhs.add_term({w.q_exponent, w.t_exponent}, 1);
  });
  std::vector<QTMonomial> factors;
  for (const auto& h : census::internal_hooks(lambda)) {
    factors.push_back({h.stats.hook_len, h.stats.leg - h.stats.arm - 1});
  }
  compare(r, "qt", lhs, product_of_geometric(factors, cap));
  r.details["rpp_count"] = count;
  r.details["hg_round_trip_failures"] = round_trip_failures;
  r.pass = r.mismatch_count == 0 && round_trip_failures == 0;
  return r;
}

IdentityReport verify_hook_strip_series(int d, int ell, int cap) {
  if (ell < 1 || d < ell) {
    throw precondition_error("hook-to-strip series needs d >= ell >= 1 (got d=" + std::to_string(d) +
                             ", ell=" + std::to_string(ell) + ")");
  }
  require_cap(cap);
  IdentityReport r;
  r.identity = "hookstrip-series";
  r.input = {{"d", d}, {"ell", ell}, {"cap", cap}};
  const auto S = strip::enumerate_S(d, ell);
  const auto Sprime = strip::enumerate_Sprime(d - ell, ell);

  std::vector<ContentMonomial> content_in;
  std::vector<ContentMonomial> content_out;
  std::vector<XYMonomial> xy_in;
  std::vector<XYMonomial> xy_out;
  for (const auto& h : S) {
    content_in.push_back(hook_monomial(h.lambda, h.cell, h.side));
    xy_in.push_back(hook_xy(h.stats));
  }
  for (const auto& h : Sprime) {
    content_out.push_back(hook_monomial(h.lambda, h.cell, h.side));
    xy_out.push_back(hook_xy(h.stats));
  }
  compare(r, "content", product_of_geometric(content_in, cap), product_of_geometric(content_out, cap));
  compare(r, "xy", product_of_geometric(xy_in, cap), product_of_geometric(xy_out, cap));
  r.details["size_S"] = S.size();
  r.details["size_Sprime"] = Sprime.size();
  r.pass = r.mismatch_count == 0;
  return r;
}

IdentityReport verify_ultimate(int d, int cap) {
  if (d < 0) throw precondition_error("d must be nonnegative");
  require_cap(cap);
  IdentityReport r;
  r.identity = "ultimate";
  r.input = {{"d", d}, {"cap", cap}};

  std::vector<XYMonomial> shifted;
  std::vector<XYMonomial> base;
  for (int ell = 1; ell <= cap; ++ell) {
    for (const auto& h : strip::enumerate_S(d + ell, ell)) shifted.push_back(hook_xy(h.stats));
    for (const auto& h : strip::enumerate_S(d, ell)) base.push_back(hook_xy(h.stats));
  }
  const auto p_d = partition_count(d);
  const BivarSeries empty_product =
      product_of_geometric(xy_factors(census::external_hooks_up_to(Partition{}, cap), cap), cap);
  const BivarSeries lhs = product_of_geometric(shifted, cap);
  const BivarSeries rhs = pow(empty_product, static_cast<int>(p_d)) * product_of_geometric(base, cap);
  compare(r, "xy", lhs, rhs);
  r.details["partition_count"] = p_d;
  r.pass = r.mismatch_count == 0;
  return r;
}

}  // namespace hookforge::series

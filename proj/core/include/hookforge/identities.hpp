#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hookforge/partition.hpp"
#include "hookforge/series.hpp"

namespace hookforge::series {

struct SeriesMismatch {
  std::string form;  // which comparison, e.g. "content" or "xy"
  std::string monomial;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one series identity check. `details` carries identity-specific
/// extras (graded counts, specializations, bijection audits).
struct IdentityReport {
  std::string identity;
  nlohmann::json input = nlohmann::json::object();
  bool pass = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::size_t mismatch_count = 0;
  std::vector<SeriesMismatch> mismatches;  // at most kListedMismatches
  nlohmann::json details = nlohmann::json::object();

  static constexpr std::size_t kListedMismatches = 20;

  nlohmann::json to_json() const;
};

/// Sum over RPPs of lambda with size <= cap of prod q_content^entry, against
/// the product over cells of 1/(1 - hook monomial).
IdentityReport verify_gansner(const Partition& lambda, int cap);

/// Same for SPPs of lambda and the external hooks of length <= cap. For the
/// empty shape `details.graded_counts` lists the size-graded totals.
IdentityReport verify_skew(const Partition& lambda, int cap);

/// prod over external hooks of lambda of 1/(1 - x^(a+1) y^leg) against the
/// empty-shape product times the internal-hook product, plus the x = y = q
/// specialization (`details.specialization_pass`).
IdentityReport verify_wallcrossing(const Partition& lambda, int cap);

/// sum over RPPs of q^size t^(sum mult*(leg - arm - 1)) against
/// prod 1/(1 - q^hook t^(leg - arm - 1)), truncated on the q-degree. Also
/// audits the Hillman-Grassl round trip on every RPP enumerated.
IdentityReport verify_refined_rpp(const Partition& lambda, int cap);

/// Products of 1/(1 - p_h) over internal hooks of length ell on partitions
/// of d and over external hooks of length ell on partitions of d - ell, in
/// content variables and in x, y. Throws precondition_error unless
/// d >= ell >= 1.
IdentityReport verify_hook_strip_series(int d, int ell, int cap);

/// prod over ell > 0 and internal hooks of length ell on partitions of
/// d + ell, against the empty-shape external product to the power p(d)
/// times the same product over partitions of d.
IdentityReport verify_ultimate(int d, int cap);

/// Series used by the identities, exposed for `series emit`.
TruncSeries rpp_weight_sum(const Partition& lambda, int cap);
TruncSeries spp_weight_sum(const Partition& lambda, int cap);
TruncSeries internal_hook_product(const Partition& lambda, int cap);
TruncSeries external_hook_product(const Partition& lambda, int cap);

}  // namespace hookforge::series

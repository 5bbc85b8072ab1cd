#include "corpus.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "hookforge/fock.hpp"
#include "hookforge/hook_census.hpp"
#include "hookforge/hook_strip.hpp"
#include "hookforge/identities.hpp"
#include "hookforge/tectonic.hpp"

namespace hookforge::cli {

std::vector<JobResult> run_jobs(const std::vector<Job>& jobs, int workers) {
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        results[k] = jobs[k].work();
      } catch (const std::exception& e) {
        results[k] = {false, {{"error", e.what()}}};
      }
    }
  };
  const auto n = static_cast<std::size_t>(std::max(1, workers));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(n, jobs.size()); ++t) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
  return results;
}

namespace {

nlohmann::json parts(const Partition& lambda) {
  return std::vector<int>(lambda.parts().begin(), lambda.parts().end());
}

template <class Report>
JobResult from_report(const Report& r) {
  return {r.pass, r.to_json()};
}

}  // namespace

std::vector<Job> corpus_jobs(int max_size, int cap) {
  std::vector<Job> jobs;
  const int bound = std::max(max_size, 1);
  for (const auto& lambda : partitions_up_to(max_size)) {
    const nlohmann::json in = {{"lambda", parts(lambda)}};
    jobs.push_back({"bessenrodt", in, [=] { return from_report(census::verify_bessenrodt(lambda, bound)); }});
    if (!lambda.empty() && is_thin(lambda)) {
      jobs.push_back({"tectonic", in, [=] {
                        return from_report(tectonic::verify_thin_bijection(lambda, tectonic::minimal_box(lambda)));
                      }});
    }
    jobs.push_back({"gansner", in, [=] { return from_report(series::verify_gansner(lambda, cap)); }});
    jobs.push_back({"skew", in, [=] { return from_report(series::verify_skew(lambda, cap)); }});
    jobs.push_back({"wallcross", in, [=] { return from_report(series::verify_wallcrossing(lambda, cap)); }});
    jobs.push_back({"refined-rpp", in, [=] { return from_report(series::verify_refined_rpp(lambda, cap)); }});
  }
  for (int d = 1; d <= max_size; ++d) {
    for (int ell = 1; ell <= d; ++ell) {
      const nlohmann::json in = {{"d", d}, {"ell", ell}};
      jobs.push_back({"hookstrip", in, [=] { return from_report(strip::verify_hook_strip(d, ell)); }});
      jobs.push_back({"hookstrip-series", in,
                      [=] { return from_report(series::verify_hook_strip_series(d, ell, cap)); }});
      jobs.push_back({"fock", in, [=] { return from_report(fock::verify_fock_identity(d, ell)); }});
    }
  }
  for (int d = 0; d <= max_size; ++d) {
    jobs.push_back({"ultimate", {{"d", d}}, [=] { return from_report(series::verify_ultimate(d, cap)); }});
  }
  return jobs;
}

nlohmann::json summarize(int max_size, int cap, const std::vector<Job>& jobs,
                         const std::vector<JobResult>& results) {
  std::map<std::string, std::pair<int, int>> tally;  // identity -> (jobs, passed)
  nlohmann::json failures = nlohmann::json::array();
  bool pass = true;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    auto& [count, passed] = tally[jobs[k].identity];
    ++count;
    if (results[k].pass) {
      ++passed;
    } else {
      pass = false;
      failures.push_back(
          {{"identity", jobs[k].identity}, {"input", jobs[k].input}, {"report", results[k].report}});
    }
  }
  nlohmann::json identities = nlohmann::json::object();
  for (const auto& [name, counts] : tally) {
    identities[name] = {{"jobs", counts.first}, {"passed", counts.second}};
  }
  return {{"max_size", max_size},
          {"cap", cap},
          {"pass", pass},
          {"job_count", jobs.size()},
          {"identities", identities},
          {"failures", failures}};
}

}  // namespace hookforge::cli

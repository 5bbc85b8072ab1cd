#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hookforge::cli {

struct JobResult {
  bool pass = false;
  nlohmann::json report;
};

struct Job {
  std::string identity;
  nlohmann::json input;
  std::function<JobResult()> work;
};

/// Runs jobs on `workers` threads. Results come back in job order, so the
/// output does not depend on scheduling. A job that throws is a failure
/// whose report carries the message.
std::vector<JobResult> run_jobs(const std::vector<Job>& jobs, int workers);

/// Every verifier over all partitions of size <= max_size and all
/// (d, ell) with 1 <= ell <= d <= max_size; series identities at `cap`.
std::vector<Job> corpus_jobs(int max_size, int cap);

/// {"max_size", "cap", "pass", "identities": {name: {jobs, passed}},
///  "failures": [...]}.
nlohmann::json summarize(int max_size, int cap, const std::vector<Job>& jobs,
                         const std::vector<JobResult>& results);

}  // namespace hookforge::cli

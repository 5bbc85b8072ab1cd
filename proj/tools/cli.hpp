#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hookforge/partition.hpp"

namespace hookforge::cli {

/// Bad flags, missing parameters, unreadable config: exit status 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by parse_args for --help; carries the help text (exit status 0).
class help_requested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { verify, enumerate, series_emit, corpus };
enum class Format { json, tsv, ndjson };

struct RunConfig {
  Command command = Command::verify;
  std::string target;  // verifier, enumeration kind or series kind
  std::optional<Partition> lambda;
  std::optional<int> d;
  std::optional<int> ell;
  std::optional<int> cap;
  std::optional<int> bound;
  std::optional<int> box;
  std::optional<int> max_size;
  std::string direction = "removal";  // fock TSV table
  std::optional<Format> format;  // defaults per command, see effective_format
  std::optional<std::string> output;
  int jobs = 1;
  bool meta = true;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv (argv[0] is the program name). `env_jobs` is the value of
/// HOOKFORGE_JOBS, if set. Throws usage_error, or help_requested
/// for --help.
RunConfig parse_args(int argc, const char* const* argv, std::optional<std::string> env_jobs = {});

/// Applies a JSON config object onto `config` (file values; flags win).
void apply_config_json(const nlohmann::json& j, RunConfig& config);

/// JSON for verify and corpus, NDJSON for enumerate, TSV for series emit.
Format effective_format(const RunConfig& config);

/// Throws usage_error naming the first missing or invalid parameter.
void validate(const RunConfig& config);

/// Runs the command, writing the report to `out` and diagnostics to `err`.
/// Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The `result` body of a run, without the meta header. Throws
/// usage_error / precondition_error like run().
struct Outcome {
  nlohmann::json result;
  std::string text;  // TSV / NDJSON payload when the format is not JSON
  bool pass = true;
};
Outcome execute(const RunConfig& config);

}  // namespace hookforge::cli

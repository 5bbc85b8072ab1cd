#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "hookforge/fock.hpp"
#include "hookforge/hook_census.hpp"
#include "hookforge/hook_strip.hpp"
#include "hookforge/identities.hpp"
#include "hookforge/plane_partitions.hpp"
#include "hookforge/tectonic.hpp"

#ifndef HOOKFORGE_VERSION
#define HOOKFORGE_VERSION "unknown"
#endif

namespace hookforge::cli {

namespace {

const std::vector<std::string> kVerifiers = {"bessenrodt", "tectonic",        "hookstrip", "gansner",
                                             "skew",       "wallcross",       "refined-rpp",
                                             "hookstrip-series", "ultimate", "fock"};
const std::vector<std::string> kEnumerations = {"partitions", "rpp", "spp", "hooks"};
const std::vector<std::string> kSeriesKinds = {"rpp", "spp", "internal-product", "external-product"};

Partition parse_lambda(const std::string& text) {
  try {
    return text == "empty" ? Partition{} : Partition::parse(text);
  } catch (const std::exception& e) {
    throw usage_error("--lambda: " + std::string(e.what()) + " (got \"" + text + "\")");
  }
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "tsv") return Format::tsv;
  if (text == "ndjson") return Format::ndjson;
  throw usage_error("--format must be json, tsv or ndjson (got \"" + text + "\")");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::tsv: return "tsv";
    case Format::ndjson: return "ndjson";
  }
  return "json";
}

int parse_jobs(const std::string& text, const std::string& source) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(text, &used);
    if (used == text.size() && n > 0) return n;
  } catch (const std::exception&) {
  }
  throw usage_error(source + " must be a positive integer (got \"" + text + "\")");
}

std::string command_name(const RunConfig& c) {
  switch (c.command) {
    case Command::verify: return "verify " + c.target;
    case Command::enumerate: return "enumerate " + c.target;
    case Command::series_emit: return "series emit " + c.target;
    case Command::corpus: return "corpus";
  }
  return {};
}

struct RawOptions {
  std::optional<std::string> lambda;
  std::optional<int> d;
  std::optional<int> ell;
  std::optional<int> cap;
  std::optional<int> bound;
  std::optional<int> box;
  std::optional<int> max_size;
  std::optional<std::string> direction;
  std::optional<std::string> format;
  std::optional<std::string> output;
  std::optional<std::string> jobs;
  std::optional<std::string> config;
  bool no_meta = false;
};

void add_common_options(CLI::App* app, RawOptions& raw) {
  app->add_option("--lambda", raw.lambda, "partition as comma-separated parts (\"\" or empty for the empty partition)");
  app->add_option("--d", raw.d, "size parameter d");
  app->add_option("--ell", raw.ell, "hook / strip length");
  app->add_option("--cap", raw.cap, "series truncation degree");
  app->add_option("--bound", raw.bound, "largest hook length compared");
  app->add_option("--box", raw.box, "side of the square window for the tectonic check");
  app->add_option("--max-size", raw.max_size, "largest partition size enumerated");
  app->add_option("--direction", raw.direction, "fock TSV table: removal or insertion");
  app->add_option("--format", raw.format, "json, tsv or ndjson");
  app->add_option("--output", raw.output, "write the report to this path");
  app->add_option("--jobs", raw.jobs, "worker threads (default: HOOKFORGE_JOBS or 1)");
  app->add_option("--config", raw.config, "JSON file with the same fields; flags override it");
  app->add_flag("--no-meta", raw.no_meta, "omit the meta header from JSON reports");
}

template <class T>
std::optional<T> json_field(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) return std::nullopt;
  try {
    return j.at(key).get<T>();
  } catch (const std::exception&) {
    throw usage_error("config field \"" + key + "\" has the wrong type");
  }
}

}  // namespace

void apply_config_json(const nlohmann::json& j, RunConfig& config) {
  if (!j.is_object()) throw usage_error("config must be a JSON object");
  static const std::set<std::string> known = {"command", "target", "lambda", "d",      "ell",
                                              "cap",     "bound",  "box",    "max_size", "direction",
                                              "format",  "output", "jobs",   "meta"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw usage_error("unknown config field \"" + key + "\"");
  }
  if (auto c = json_field<std::string>(j, "command")) {
    if (*c == "verify") {
      config.command = Command::verify;
    } else if (*c == "enumerate") {
      config.command = Command::enumerate;
    } else if (*c == "series emit" || *c == "series") {
      config.command = Command::series_emit;
    } else if (*c == "corpus") {
      config.command = Command::corpus;
    } else {
      throw usage_error("config field \"command\" is not a command (got \"" + *c + "\")");
    }
  }
  if (auto v = json_field<std::string>(j, "target")) config.target = *v;
  if (j.contains("lambda")) {
    if (j["lambda"].is_array()) {
      try {
        config.lambda = Partition(j["lambda"].get<std::vector<int>>());
      } catch (const std::exception& e) {
        throw usage_error("config field \"lambda\": " + std::string(e.what()));
      }
    } else {
      config.lambda = parse_lambda(json_field<std::string>(j, "lambda").value());
    }
  }
  if (auto v = json_field<int>(j, "d")) config.d = v;
  if (auto v = json_field<int>(j, "ell")) config.ell = v;
  if (auto v = json_field<int>(j, "cap")) config.cap = v;
  if (auto v = json_field<int>(j, "bound")) config.bound = v;
  if (auto v = json_field<int>(j, "box")) config.box = v;
  if (auto v = json_field<int>(j, "max_size")) config.max_size = v;
  if (auto v = json_field<std::string>(j, "direction")) config.direction = *v;
  if (auto v = json_field<std::string>(j, "format")) config.format = parse_format(*v);
  if (auto v = json_field<std::string>(j, "output")) config.output = v;
  if (auto v = json_field<int>(j, "jobs")) {
    if (*v < 1) throw usage_error("config field \"jobs\" must be positive");
    config.jobs = *v;
  }
  if (auto v = json_field<bool>(j, "meta")) config.meta = *v;
}

RunConfig parse_args(int argc, const char* const* argv, std::optional<std::string> env_jobs) {
  CLI::App app{"Checks hook, plane partition and free boson identities on exhaustive corpora.",
               "hookforge"};
  app.require_subcommand(0, 1);
  RawOptions raw;
  std::string target;
  add_common_options(&app, raw);

  auto* verify = app.add_subcommand("verify", "run one verifier");
  verify->add_option("target", target, "verifier")->required()->check(CLI::IsMember(kVerifiers));
  add_common_options(verify, raw);

  auto* enumerate = app.add_subcommand("enumerate", "stream objects as NDJSON");
  enumerate->add_option("target", target, "what to enumerate")->required()->check(CLI::IsMember(kEnumerations));
  add_common_options(enumerate, raw);

  auto* series = app.add_subcommand("series", "series utilities");
  series->require_subcommand(1);
  auto* emit = series->add_subcommand("emit", "dump a truncated series as TSV");
  emit->add_option("kind", target, "series to dump")->required()->check(CLI::IsMember(kSeriesKinds));
  add_common_options(emit, raw);

  auto* corpus = app.add_subcommand("corpus", "run every verifier over a size-bounded corpus");
  add_common_options(corpus, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw help_requested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw help_requested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }
  RunConfig config;
  bool have_command = false;
  if (env_jobs) config.jobs = parse_jobs(*env_jobs, "HOOKFORGE_JOBS");
  if (raw.config) {
    std::ifstream in(*raw.config);
    if (!in) throw usage_error("--config: cannot open \"" + *raw.config + "\"");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw usage_error("--config: " + std::string(e.what()));
    }
    apply_config_json(j, config);
    have_command = j.contains("command");
  }

  if (verify->parsed()) {
    config.command = Command::verify;
  } else if (enumerate->parsed()) {
    config.command = Command::enumerate;
  } else if (emit->parsed()) {
    config.command = Command::series_emit;
  } else if (corpus->parsed()) {
    config.command = Command::corpus;
  } else if (!have_command) {
    throw usage_error("no command given (verify, enumerate, series emit or corpus)");
  }
  if (!target.empty()) config.target = target;

  if (raw.lambda) config.lambda = parse_lambda(*raw.lambda);
  if (raw.d) config.d = raw.d;
  if (raw.ell) config.ell = raw.ell;
  if (raw.cap) config.cap = raw.cap;
  if (raw.bound) config.bound = raw.bound;
  if (raw.box) config.box = raw.box;
  if (raw.max_size) config.max_size = raw.max_size;
  if (raw.direction) config.direction = *raw.direction;
  if (raw.format) config.format = parse_format(*raw.format);
  if (raw.output) config.output = raw.output;
  if (raw.jobs) config.jobs = parse_jobs(*raw.jobs, "--jobs");
  if (raw.no_meta) config.meta = false;
  return config;
}

Format effective_format(const RunConfig& config) {
  if (config.format) return *config.format;
  switch (config.command) {
    case Command::enumerate: return Format::ndjson;
    case Command::series_emit: return Format::tsv;
    default: return Format::json;
  }
}

void validate(const RunConfig& c) {
  auto need = [](bool present, const std::string& flag, const std::string& what) {
    if (!present) throw usage_error(what + " needs " + flag);
  };
  auto nonneg = [](const std::optional<int>& v, const std::string& flag) {
    if (v && *v < 0) throw usage_error(flag + " must be nonnegative (got " + std::to_string(*v) + ")");
  };
  nonneg(c.d, "--d");
  nonneg(c.ell, "--ell");
  nonneg(c.cap, "--cap");
  nonneg(c.bound, "--bound");
  nonneg(c.box, "--box");
  nonneg(c.max_size, "--max-size");
  if (c.jobs < 1) throw usage_error("--jobs must be positive");

  const std::string what = command_name(c);
  const Format format = effective_format(c);
  auto formats = [&](std::initializer_list<Format> allowed) {
    for (const Format f : allowed) {
      if (f == format) return;
    }
    throw usage_error(what + " does not support --format " + format_name(format));
  };
  auto member = [&](const std::vector<std::string>& names) {
    if (std::find(names.begin(), names.end(), c.target) == names.end()) {
      throw usage_error(what + ": unknown target \"" + c.target + "\"");
    }
  };

  switch (c.command) {
    case Command::verify: {
      member(kVerifiers);
      const std::string& t = c.target;
      if (t == "bessenrodt") {
        need(c.lambda.has_value(), "--lambda", what);
        need(c.bound.has_value(), "--bound", what);
      } else if (t == "tectonic") {
        need(c.lambda.has_value(), "--lambda", what);
      } else if (t == "hookstrip" || t == "fock") {
        need(c.d.has_value(), "--d", what);
        need(c.ell.has_value(), "--ell", what);
      } else if (t == "hookstrip-series") {
        need(c.d.has_value(), "--d", what);
        need(c.ell.has_value(), "--ell", what);
        need(c.cap.has_value(), "--cap", what);
      } else if (t == "ultimate") {
        need(c.d.has_value(), "--d", what);
        need(c.cap.has_value(), "--cap", what);
      } else {
        need(c.lambda.has_value(), "--lambda", what);
        need(c.cap.has_value(), "--cap", what);
      }
      if (t == "fock") {
        formats({Format::json, Format::tsv});
        if (c.direction != "removal" && c.direction != "insertion") {
          throw usage_error("--direction must be removal or insertion (got \"" + c.direction + "\")");
        }
      } else {
        formats({Format::json});
      }
      break;
    }
    case Command::enumerate:
      member(kEnumerations);
      formats({Format::ndjson, Format::json});
      if (c.target == "partitions") {
        need(c.max_size.has_value(), "--max-size", what);
      } else if (c.target == "hooks") {
        need(c.lambda.has_value(), "--lambda", what);
        need(c.bound.has_value(), "--bound", what);
      } else {
        need(c.lambda.has_value(), "--lambda", what);
        need(c.max_size.has_value(), "--max-size", what);
      }
      break;
    case Command::series_emit:
      member(kSeriesKinds);
      formats({Format::tsv, Format::json});
      need(c.lambda.has_value(), "--lambda", what);
      need(c.cap.has_value(), "--cap", what);
      break;
    case Command::corpus:
      formats({Format::json});
      need(c.max_size.has_value(), "--max-size", what);
      break;
  }
}

namespace {

nlohmann::json parts_json(const Partition& lambda) {
  return std::vector<int>(lambda.parts().begin(), lambda.parts().end());
}

nlohmann::json hook_json(const census::HookAt& h) {
  return {{"cell", {h.cell.row, h.cell.col}},
          {"side", std::string(to_string(h.stats.side))},
          {"arm", h.stats.arm},
          {"leg", h.stats.leg},
          {"hook_len", h.stats.hook_len},
          {"hand", {h.stats.hand.row, h.stats.hand.col}},
          {"foot", {h.stats.foot.row, h.stats.foot.col}},
          {"contents", {h.stats.content_lo, h.stats.content_hi}}};
}

// Collects items either as NDJSON lines or as a JSON array.
struct ItemSink {
  bool ndjson;
  std::string text;
  nlohmann::json items = nlohmann::json::array();

  void push(nlohmann::json item) {
    if (ndjson) {
      text += item.dump();
      text += '\n';
    } else {
      items.push_back(std::move(item));
    }
  }
};

Outcome run_verify(const RunConfig& c) {
  const std::string& t = c.target;
  Outcome o;
  auto take = [&](const auto& report) {
    o.result = report.to_json();
    o.pass = report.pass;
  };
  if (t == "bessenrodt") {
    take(census::verify_bessenrodt(*c.lambda, *c.bound));
  } else if (t == "tectonic") {
    if (c.lambda->empty()) throw precondition_error("the tectonic check needs a non-empty partition");
    take(tectonic::verify_thin_bijection(*c.lambda, c.box.value_or(tectonic::minimal_box(*c.lambda))));
  } else if (t == "hookstrip") {
    take(strip::verify_hook_strip(*c.d, *c.ell));
  } else if (t == "gansner") {
    take(series::verify_gansner(*c.lambda, *c.cap));
  } else if (t == "skew") {
    take(series::verify_skew(*c.lambda, *c.cap));
  } else if (t == "wallcross") {
    take(series::verify_wallcrossing(*c.lambda, *c.cap));
  } else if (t == "refined-rpp") {
    take(series::verify_refined_rpp(*c.lambda, *c.cap));
  } else if (t == "hookstrip-series") {
    take(series::verify_hook_strip_series(*c.d, *c.ell, *c.cap));
  } else if (t == "ultimate") {
    take(series::verify_ultimate(*c.d, *c.cap));
  } else if (t == "fock") {
    const fock::FockReport report = fock::verify_fock_identity(*c.d, *c.ell);
    take(report);
    if (effective_format(c) == Format::tsv) {
      o.text = "lambda\tmu\tmonomial\n" +
               fock::FockReport::table_tsv(c.direction == "removal" ? report.removals : report.insertions);
    }
  }
  return o;
}

Outcome run_enumerate(const RunConfig& c) {
  ItemSink sink{effective_format(c) == Format::ndjson, {}};
  if (c.target == "partitions") {
    for (const auto& lambda : partitions_up_to(*c.max_size)) {
      sink.push({{"lambda", parts_json(lambda)}, {"size", lambda.size()}});
    }
  } else if (c.target == "rpp" || c.target == "spp") {
    auto emit = [&](const pp::Filling& f) {
      nlohmann::json j = pp::to_json(f);
      j["size"] = f.size;
      sink.push(std::move(j));
    };
    if (c.target == "rpp") {
      pp::for_each_rpp(*c.lambda, *c.max_size, emit);
    } else {
      pp::for_each_spp(*c.lambda, *c.max_size, emit);
    }
  } else {
    for (const auto& h : census::internal_hooks(*c.lambda)) sink.push(hook_json(h));
    for (const auto& h : census::external_hooks_up_to(*c.lambda, *c.bound)) sink.push(hook_json(h));
  }
  Outcome o;
  o.text = std::move(sink.text);
  if (!sink.ndjson) o.result = {{"count", sink.items.size()}, {"items", std::move(sink.items)}};
  return o;
}

Outcome run_series_emit(const RunConfig& c) {
  series::TruncSeries s;
  if (c.target == "rpp") {
    s = series::rpp_weight_sum(*c.lambda, *c.cap);
  } else if (c.target == "spp") {
    s = series::spp_weight_sum(*c.lambda, *c.cap);
  } else if (c.target == "internal-product") {
    s = series::internal_hook_product(*c.lambda, *c.cap);
  } else {
    s = series::external_hook_product(*c.lambda, *c.cap);
  }
  Outcome o;
  if (effective_format(c) == Format::tsv) {
    o.text = s.to_tsv();
  } else {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, coeff] : s.terms()) terms.push_back({m.to_string(), coeff.str()});
    o.result = {{"kind", c.target}, {"lambda", parts_json(*c.lambda)}, {"cap", *c.cap}, {"terms", terms}};
  }
  return o;
}

Outcome run_corpus(const RunConfig& c) {
  const int cap = c.cap.value_or(*c.max_size);
  const auto jobs = corpus_jobs(*c.max_size, cap);
  const auto results = run_jobs(jobs, c.jobs);
  Outcome o;
  o.result = summarize(*c.max_size, cap, jobs, results);
  o.pass = o.result["pass"].get<bool>();
  return o;
}

}  // namespace

Outcome execute(const RunConfig& config) {
  validate(config);
  switch (config.command) {
    case Command::verify: return run_verify(config);
    case Command::enumerate: return run_enumerate(config);
    case Command::series_emit: return run_series_emit(config);
    case Command::corpus: return run_corpus(config);
  }
  throw usage_error("unknown command");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = execute(config);
  } catch (const usage_error& e) {
    err << "hookforge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const precondition_error& e) {
    err << "hookforge: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  std::string payload;
  if (effective_format(config) == Format::json) {
    nlohmann::json doc;
    if (config.meta) {
      doc["meta"] = {{"tool", "hookforge"},
                     {"version", HOOKFORGE_VERSION},
                     {"command", command_name(config)},
                     {"jobs", config.jobs},
                     {"elapsed_ms", elapsed.count()}};
    }
    doc["result"] = outcome.result;
    payload = doc.dump(2) + "\n";
  } else {
    payload = outcome.text;
  }

  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      err << "hookforge: --output: cannot write \"" << *config.output << "\"\n";
      return kExitUsage;
    }
    file << payload;
  } else {
    out << payload;
  }
  if (!outcome.pass) err << "hookforge: " << command_name(config) << " FAILED\n";
  return outcome.pass ? kExitPass : kExitFail;
}

}  // namespace hookforge::cli

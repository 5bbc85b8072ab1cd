#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "corpus.hpp"

using namespace hookforge;
using namespace hookforge::cli;

namespace {

RunConfig parse(std::vector<std::string> args, std::optional<std::string> env_jobs = {}) {
  args.insert(args.begin(), "hookforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_args(static_cast<int>(argv.size()), argv.data(), std::move(env_jobs));
}

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run_args(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(parse(std::move(args)), out, err);
  return {status, out.str(), err.str()};
}

std::string missing_flag(std::vector<std::string> args) {
  try {
    validate(parse(std::move(args)));
  } catch (const usage_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Cli, ParsesVerify) {
  const auto c = parse({"verify", "bessenrodt", "--lambda", "8,4,3,2,2", "--bound", "12"});
  EXPECT_EQ(c.command, Command::verify);
  EXPECT_EQ(c.target, "bessenrodt");
  EXPECT_EQ(c.lambda, (Partition{8, 4, 3, 2, 2}));
  EXPECT_EQ(c.bound, 12);
  EXPECT_EQ(effective_format(c), Format::json);
  EXPECT_TRUE(c.meta);
  EXPECT_EQ(c.jobs, 1);
}

TEST(Cli, EmptyPartitionSpellings) {
  EXPECT_TRUE(parse({"verify", "skew", "--lambda", "", "--cap", "3"}).lambda->empty());
  EXPECT_TRUE(parse({"verify", "skew", "--lambda", "empty", "--cap", "3"}).lambda->empty());
  EXPECT_THROW(parse({"verify", "skew", "--lambda", "1,2", "--cap", "3"}), usage_error);
}

TEST(Cli, DefaultFormats) {
  EXPECT_EQ(effective_format(parse({"enumerate", "partitions", "--max-size", "3"})), Format::ndjson);
  EXPECT_EQ(effective_format(parse({"series", "emit", "rpp", "--lambda", "1", "--cap", "2"})), Format::tsv);
  EXPECT_EQ(effective_format(parse({"corpus", "--max-size", "2"})), Format::json);
}

TEST(Cli, MissingParametersAreNamed) {
  EXPECT_NE(missing_flag({"verify", "gansner", "--lambda", "2,1"}).find("--cap"), std::string::npos);
  EXPECT_NE(missing_flag({"verify", "bessenrodt", "--lambda", "2,1"}).find("--bound"), std::string::npos);
  EXPECT_NE(missing_flag({"verify", "fock", "--d", "3"}).find("--ell"), std::string::npos);
  EXPECT_NE(missing_flag({"corpus"}).find("--max-size"), std::string::npos);
  EXPECT_NE(missing_flag({"verify", "hookstrip", "--d", "3", "--ell", "1", "--format", "tsv"}).find("--format"),
            std::string::npos);
}

TEST(Cli, UnknownInputsAreUsageErrors) {
  EXPECT_THROW(parse({"verify", "nonsense"}), usage_error);
  EXPECT_THROW(parse({"frobnicate"}), usage_error);
  EXPECT_THROW(parse({"verify", "gansner", "--cap", "x"}), usage_error);
  EXPECT_THROW(parse({"--help"}), help_requested);
}

TEST(Cli, JobsFromEnvironment) {
  EXPECT_EQ(parse({"corpus", "--max-size", "2"}, "3").jobs, 3);
  EXPECT_EQ(parse({"corpus", "--max-size", "2", "--jobs", "2"}, "3").jobs, 2);
  EXPECT_THROW(parse({"corpus", "--max-size", "2"}, "lots"), usage_error);
  EXPECT_THROW(parse({"corpus", "--max-size", "2"}, "0"), usage_error);
}

TEST(Cli, ExitStatuses) {
  const auto ok = run_args({"verify", "bessenrodt", "--lambda", "8,4,3,2,2", "--bound", "12"});
  EXPECT_EQ(ok.status, kExitPass);
  const auto doc = nlohmann::json::parse(ok.out);
  EXPECT_EQ(doc["meta"]["tool"], "hookforge");
  EXPECT_TRUE(doc["result"]["pass"].get<bool>());

  const auto thin = run_args({"verify", "tectonic", "--lambda", "12,10,8,8,8,8,8,8,1,1,1"});
  EXPECT_EQ(thin.status, kExitUsage);
  EXPECT_NE(thin.err.find("not thin"), std::string::npos) << thin.err;
  EXPECT_NE(thin.err.find("x_1 + ... + x_2 = 8 > x_3 = 2"), std::string::npos) << thin.err;

  const auto missing = run_args({"verify", "gansner", "--lambda", "2,1"});
  EXPECT_EQ(missing.status, kExitUsage);
  EXPECT_NE(missing.err.find("--cap"), std::string::npos);

  const auto small_box = run_args({"verify", "tectonic", "--lambda", "2,1", "--box", "3"});
  EXPECT_EQ(small_box.status, kExitUsage);
}

TEST(Cli, FailedCorpusJobsAreReported) {
  const std::vector<Job> jobs = {
      {"ok", {{"n", 1}}, [] { return JobResult{true, {}}; }},
      {"broken", {{"n", 2}}, []() -> JobResult { throw std::runtime_error("boom"); }},
      {"bad", {{"n", 3}}, [] { return JobResult{false, {{"why", "mismatch"}}}; }},
  };
  const auto results = run_jobs(jobs, 2);
  ASSERT_EQ(results.size(), 3u);
  EXPECT_TRUE(results[0].pass);
  EXPECT_FALSE(results[1].pass);
  EXPECT_EQ(results[1].report["error"], "boom");
  const auto summary = summarize(3, 3, jobs, results);
  EXPECT_FALSE(summary["pass"].get<bool>());
  EXPECT_EQ(summary["failures"].size(), 2u);
  EXPECT_EQ(summary["identities"]["ok"]["passed"], 1);
}

TEST(Cli, SeriesEmitTsvIsFrozen) {
  const auto r = run_args({"series", "emit", "rpp", "--lambda", "2,1", "--cap", "3"});
  ASSERT_EQ(r.status, kExitPass);
  EXPECT_EQ(r.out,
            "1\t1\n"
            "q[-1]\t1\n"
            "q[1]\t1\n"
            "q[-1]*q[1]\t1\n"
            "q[-1]^2\t1\n"
            "q[1]^2\t1\n"
            "q[-1]*q[0]*q[1]\t1\n"
            "q[-1]*q[1]^2\t1\n"
            "q[-1]^2*q[1]\t1\n"
            "q[-1]^3\t1\n"
            "q[1]^3\t1\n");
  const auto product = run_args({"series", "emit", "internal-product", "--lambda", "2,1", "--cap", "3"});
  EXPECT_EQ(product.out, r.out);
}

TEST(Cli, EnumerateNdjson) {
  const auto r = run_args({"enumerate", "partitions", "--max-size", "3"});
  ASSERT_EQ(r.status, kExitPass);
  std::istringstream lines(r.out);
  std::vector<nlohmann::json> items;
  for (std::string line; std::getline(lines, line);) items.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(items.size(), 7u);
  EXPECT_EQ(items[0]["lambda"], nlohmann::json::array());
  EXPECT_EQ(items[6]["lambda"], nlohmann::json({1, 1, 1}));

  const auto spp = run_args({"enumerate", "spp", "--lambda", "", "--max-size", "3", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(spp.out)["result"]["count"], 1 + 1 + 3 + 6);
}

TEST(Cli, FockTable) {
  const auto r = run_args({"verify", "fock", "--d", "2", "--ell", "1", "--format", "tsv"});
  ASSERT_EQ(r.status, kExitPass);
  EXPECT_EQ(r.out.rfind("lambda\tmu\tmonomial\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto path = std::filesystem::temp_directory_path() / "hookforge_cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"command": "verify", "target": "gansner", "lambda": [2, 1], "cap": 2})";
  }
  const auto from_file = parse({"--config", path.string()});
  EXPECT_EQ(from_file.target, "gansner");
  EXPECT_EQ(from_file.cap, 2);
  const auto overridden = parse({"verify", "gansner", "--config", path.string(), "--cap", "5"});
  EXPECT_EQ(overridden.cap, 5);
  EXPECT_EQ(overridden.lambda, (Partition{2, 1}));
  {
    std::ofstream f(path);
    f << R"({"cap": 2, "colour": "blue"})";
  }
  EXPECT_THROW(parse({"verify", "gansner", "--config", path.string()}), usage_error);
  std::filesystem::remove(path);
  EXPECT_THROW(parse({"verify", "gansner", "--config", path.string()}), usage_error);
}

TEST(Cli, CorpusIsDeterministicAcrossWorkerCounts) {
  auto body = [](int jobs) {
    RunConfig c = parse({"corpus", "--max-size", "4", "--no-meta"});
    c.jobs = jobs;
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(run(c, out, err), kExitPass) << err.str();
    return out.str();
  };
  const std::string one = body(1);
  EXPECT_EQ(one, body(3));
  const auto doc = nlohmann::json::parse(one);
  EXPECT_FALSE(doc.contains("meta"));
  EXPECT_TRUE(doc["result"]["pass"].get<bool>());
}

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace hookforge::cli;
  std::optional<std::string> env_jobs;
  if (const char* v = std::getenv("HOOKFORGE_JOBS")) env_jobs = v;
  try {
    const RunConfig config = parse_args(argc, argv, env_jobs);
    return run(config, std::cout, std::cerr);
  } catch (const help_requested& h) {
    std::cout << h.what();
    return kExitPass;
  } catch (const usage_error& e) {
    std::cerr << "hookforge: " << e.what() << '\n';
    return kExitUsage;
  }
}

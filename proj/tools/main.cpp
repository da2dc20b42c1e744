#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace systole::cli;
  Environment env;
  try {
    env = Environment::from_process();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  const std::vector<std::string> args(argv + 1, argv + argc);
  const RunResult result = run(args, env);
  std::fwrite(result.out.data(), 1, result.out.size(), stdout);
  std::fwrite(result.err.data(), 1, result.err.size(), stderr);
  return result.exit_code;
}

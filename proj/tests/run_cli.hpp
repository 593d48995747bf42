#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace hhcross::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the CLI with `args` (already shell-quoted), capturing stdout.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + HHCROSS_CLI_PATH + "\" " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string problem(const std::string& name) {
  return std::string("\"") + HHCROSS_PROBLEMS_DIR + "/" + name + "\"";
}

}  // namespace hhcross::testing

#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace pgw::test {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the workbench with `args` (already shell-quoted); stderr is discarded.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PGW_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string data_file(const std::string& name) { return std::string(PGW_DATA_DIR) + "/" + name; }

}  // namespace pgw::test

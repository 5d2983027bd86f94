#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace tint::testing {

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string ring_path(const std::string& name) {
  return std::string(TINT_RINGS_DIR) + "/" + name + ".ring";
}

/// Runs the tint binary with `args` through the shell.
inline CliRun run_cli(const std::string& args) {
  auto base = std::filesystem::temp_directory_path() /
              ("tint_cli_" + std::to_string(::getpid()) + "_" + std::to_string(std::rand()));
  std::string out_file = base.string() + ".out";
  std::string err_file = base.string() + ".err";
  std::string cmd = std::string("'") + TINT_CLI_PATH + "' " + args + " >'" + out_file + "' 2>'" + err_file + "'";
  int status = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  auto read = [](const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  r.out = read(out_file);
  r.err = read(err_file);
  std::filesystem::remove(out_file);
  std::filesystem::remove(err_file);
  return r;
}

}  // namespace tint::testing

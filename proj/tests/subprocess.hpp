#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace subprocess {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline RunResult run_command(const std::string& command_line,
                             const std::string& stdin_text = "") {
  static int counter = 0;
  const std::string base = "/tmp/hmat_subprocess_" + std::to_string(counter++) + "_" +
                           std::to_string(getpid());
  const std::string out_path = base + ".out";
  const std::string err_path = base + ".err";
  const std::string in_path = base + ".in";
  {
    std::ofstream in(in_path);
    in << stdin_text;
  }
  const std::string full = command_line + " < " + in_path + " > " + out_path + " 2> " +
                           err_path;
  const int status = std::system(full.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp_file(out_path);
  result.err = slurp_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  std::remove(in_path.c_str());
  return result;
}

}  // namespace subprocess

// Copyright 2026 The normnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NORMNET_TESTS_SUPPORT_SUBPROCESS_HPP_
#define NORMNET_TESTS_SUPPORT_SUBPROCESS_HPP_

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace normnet::testing {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string shell_quote(const std::string& arg) {
  std::string quoted = "'";
  for (char c : arg) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += "'";
  return quoted;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string temp_path(const std::string& tag) {
  static int counter = 0;
  return "/tmp/normnet_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
         std::to_string(counter++);
}

// Runs the CLI under test with the given arguments, capturing both streams
// and the exit code.
inline CommandResult run_cli(const std::vector<std::string>& args) {
  const std::string out_path = temp_path("out");
  const std::string err_path = temp_path("err");
  std::string command = shell_quote(NORMNET_CLI_PATH);
  for (const std::string& arg : args) command += " " + shell_quote(arg);
  command += " > " + out_path + " 2> " + err_path;
  const int raw = std::system(command.c_str());
  if (raw == -1) throw std::runtime_error("system() failed");
  CommandResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

inline std::string write_temp_file(const std::string& tag,
                                   const std::string& content) {
  const std::string path = temp_path(tag);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace normnet::testing

#endif  // NORMNET_TESTS_SUPPORT_SUBPROCESS_HPP_

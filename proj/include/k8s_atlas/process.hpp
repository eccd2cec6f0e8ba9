// Copyright 2026 The k8s-atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <csignal>
#include <filesystem>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include <boost/asio.hpp>
#include <boost/process.hpp>

#include "k8s_atlas/errors.hpp"

namespace k8s_atlas {

struct ProcessResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Locates an executable. Names containing a path separator are taken as
/// paths; bare names are searched on PATH. Returns nullopt if not runnable.
inline std::optional<std::filesystem::path> find_executable(const std::string& name) {
  namespace fs = std::filesystem;
  if (name.empty()) return std::nullopt;
  if (name.find('/') != std::string::npos) {
    std::error_code ec;
    if (fs::is_regular_file(name, ec)) return fs::path(name);
    return std::nullopt;
  }
  auto found = boost::process::search_path(name);
  if (found.empty()) return std::nullopt;
  return fs::path(found.string());
}

inline std::string describe_command(const std::string& program,
                                    const std::vector<std::string>& args) {
  std::string cmd = program;
  for (const auto& a : args) cmd += " " + a;
  return cmd;
}

/// Runs `program args...` to completion, feeding `input` on stdin and
/// capturing both output streams. Throws MissingBinary if the program
/// cannot be found; a nonzero exit is reported in the result, not thrown.
inline ProcessResult run_process(const std::string& program,
                                 const std::vector<std::string>& args,
                                 const std::string& input = {},
                                 const std::optional<std::filesystem::path>& workdir = {}) {
  namespace bp = boost::process;
  auto exe = find_executable(program);
  if (!exe) throw MissingBinary(program);
  // A child that exits without draining stdin must not kill us.
  std::signal(SIGPIPE, SIG_IGN);

  boost::asio::io_context ios;
  std::future<std::string> out;
  std::future<std::string> err;
  bp::child child;
  try {
    const auto start = workdir ? workdir->string() : std::filesystem::current_path().string();
    child = bp::child(exe->string(), args, bp::std_in < boost::asio::buffer(input),
                      bp::std_out > out, bp::std_err > err, ios, bp::start_dir = start);
  } catch (const bp::process_error& e) {
    throw IoError("cannot start '" + program + "': " + e.what(), ErrorClass::Environment);
  }
  ios.run();
  child.wait();
  return ProcessResult{child.exit_code(), out.get(), err.get()};
}

}  // namespace k8s_atlas

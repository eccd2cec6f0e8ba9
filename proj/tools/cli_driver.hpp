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

// Shared plumbing for the kube-diagrams and helm-diagrams executables.
// Exit codes: 0 success, 1 input/config error, 2 environment/render error.

#pragma once

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "k8s_atlas/k8s_atlas.hpp"

namespace k8s_atlas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitEnvironment = 2;

enum class Verbosity { Quiet, Normal, Verbose };

struct InvocationOptions {
  std::vector<SourceSpec> inputs;
  std::string output;
  std::vector<std::string> config_paths;
  bool cluster_frame = false;
  Verbosity verbosity = Verbosity::Normal;
};

inline int exit_code_for(const Error& e) {
  return e.error_class() == ErrorClass::Environment ? kExitEnvironment : kExitInput;
}

/// Runs the pipeline and writes the diagram. `-` as output writes DOT to
/// stdout and nothing else.
inline int run(const std::string& program, const InvocationOptions& opts,
               const std::filesystem::path& executable) {
  Diagnostics diag;
  const auto report = [&] {
    if (opts.verbosity != Verbosity::Quiet) diag.flush(std::cerr, program + ": warning: ");
  };
  try {
    const bool to_stdout = opts.output == "-";
    const auto format = to_stdout ? RenderFormat::DOT : infer_format(opts.output);

    PipelineOptions popts;
    popts.inputs = opts.inputs;
    for (const auto& c : opts.config_paths) popts.config_paths.emplace_back(c);
    popts.cluster_frame = opts.cluster_frame;
    popts.icon_dir = locate_icon_dir(executable);
    const auto result = run_pipeline(popts, &diag);

    if (opts.verbosity == Verbosity::Verbose)
      std::cerr << program << ": " << result.graph.nodes.size() << " nodes, "
                << result.graph.edges.size() << " edges\n";

    if (to_stdout) {
      report();
      std::cout << result.dot.text << std::flush;
      return kExitOk;
    }
    std::optional<std::filesystem::path> workdir;
    if (!popts.icon_dir.empty()) workdir = popts.icon_dir;
    render(result.dot, format, opts.output, workdir);
    report();
    if (opts.verbosity == Verbosity::Verbose)
      std::cerr << program << ": wrote " << opts.output << '\n';
    return kExitOk;
  } catch (const Error& e) {
    report();
    std::cerr << program << ": error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const YAML::Exception& e) {
    // Malformed input reaching yaml-cpp directly is still an input problem.
    report();
    std::cerr << program << ": error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    report();
    std::cerr << program << ": error: " << e.what() << '\n';
    return kExitEnvironment;
  }
}

/// "oci://r/charts/foo:1.2", "./charts/foo/", "foo-0.1.0.tgz" -> "foo", "foo", "foo-0.1.0".
inline std::string chart_name(std::string ref) {
  while (ref.size() > 1 && ref.back() == '/') ref.pop_back();
  if (auto slash = ref.rfind('/'); slash != std::string::npos) ref = ref.substr(slash + 1);
  if (auto colon = ref.rfind(':'); colon != std::string::npos) ref = ref.substr(0, colon);
  if (ref.size() > 4 && ref.ends_with(".tgz")) ref.resize(ref.size() - 4);
  if (ref.empty() || ref == "." || ref == "..") {
    ref = std::filesystem::absolute(ref.empty() ? "." : ref).lexically_normal().filename().string();
    if (ref.empty()) ref = "chart";
  }
  return ref;
}

}  // namespace k8s_atlas::cli

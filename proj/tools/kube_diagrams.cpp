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

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#ifdef K8S_ATLAS_CLI11_SPLIT_HEADERS
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "cli_driver.hpp"

namespace cli = k8s_atlas::cli;
using k8s_atlas::SourceSpec;

int main(int argc, char** argv) {
  CLI::App app{"Generate an architecture diagram from Kubernetes manifests.", "kube-diagrams"};

  std::vector<std::string> inputs;
  std::vector<std::string> kustomize_dirs;
  std::vector<std::string> helmfiles;
  bool live = false;
  bool verbose = false;
  bool quiet = false;
  cli::InvocationOptions opts;

  app.add_option("inputs", inputs, "Manifest files or directories; '-' reads stdin");
  app.add_option("-o,--output", opts.output,
                 "Output file; format from extension (png jpg gif tiff svg pdf dot gv), '-' = DOT on stdout");
  app.add_option("-c,--config", opts.config_paths, "Custom configuration file (repeatable)")
      ->allow_extra_args(false);
  app.add_flag("--cluster-frame", opts.cluster_frame, "Wrap the diagram in a Kubernetes cluster frame");
  app.add_option("--kustomize", kustomize_dirs, "Render a kustomization directory with `kustomize build`")
      ->allow_extra_args(false);
  app.add_option("--helmfile", helmfiles, "Render a helmfile with `helmfile template`")->allow_extra_args(false);
  app.add_flag("--live-cluster", live, "Read the live cluster with `kubectl get all -o yaml`");
  app.add_flag("-v,--verbose", verbose, "Print progress to stderr");
  app.add_flag("-q,--quiet", quiet, "Suppress warnings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInput;
  }

  for (const auto& in : inputs)
    opts.inputs.push_back(in == "-" ? SourceSpec::stdin_source() : SourceSpec::file(in));
  for (const auto& k : kustomize_dirs) opts.inputs.push_back(SourceSpec::kustomization(k));
  for (const auto& h : helmfiles) opts.inputs.push_back(SourceSpec::helmfile(h));
  if (live) opts.inputs.push_back(SourceSpec::live_cluster());
  opts.verbosity = quiet ? cli::Verbosity::Quiet : verbose ? cli::Verbosity::Verbose : cli::Verbosity::Normal;

  if (opts.inputs.empty()) {
    std::cerr << "kube-diagrams: error: no input given\n" << app.help();
    return cli::kExitInput;
  }
  if (opts.output.empty()) {
    const auto& first = opts.inputs.front();
    if (first.kind != k8s_atlas::SourceKind::File) {
      std::cerr << "kube-diagrams: error: -o/--output is required for this input\n";
      return cli::kExitInput;
    }
    auto p = std::filesystem::path(first.locator);
    opts.output = (p.has_stem() ? p.stem() : p.filename()).string() + ".png";
  }
  return cli::run("kube-diagrams", opts, argv[0]);
}

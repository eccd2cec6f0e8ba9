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

#include <iostream>
#include <string>

#ifdef K8S_ATLAS_CLI11_SPLIT_HEADERS
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "cli_driver.hpp"

namespace cli = k8s_atlas::cli;

int main(int argc, char** argv) {
  CLI::App app{"Generate an architecture diagram from a Helm chart (local path, repo URL or OCI ref).",
               "helm-diagrams"};

  std::string chart;
  bool verbose = false;
  bool quiet = false;
  cli::InvocationOptions opts;

  app.add_option("chart", chart, "Chart reference passed to `helm template`");
  app.add_option("-o,--output", opts.output, "Output file (default: <chart name>.png)");
  app.add_option("-c,--config", opts.config_paths, "Custom configuration file (repeatable)")
      ->allow_extra_args(false);
  app.add_flag("--cluster-frame", opts.cluster_frame, "Wrap the diagram in a Kubernetes cluster frame");
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

  if (chart.empty()) {
    std::cerr << "helm-diagrams: error: no chart given\n" << app.help();
    return cli::kExitInput;
  }
  if (!k8s_atlas::find_executable("helm")) {
    std::cerr << "helm-diagrams: error: required executable 'helm' not found on PATH\n";
    return cli::kExitEnvironment;
  }
  opts.inputs.push_back(k8s_atlas::SourceSpec::helm_chart(chart));
  if (opts.output.empty()) opts.output = cli::chart_name(chart) + ".png";
  opts.verbosity = quiet ? cli::Verbosity::Quiet : verbose ? cli::Verbosity::Verbose : cli::Verbosity::Normal;
  return cli::run("helm-diagrams", opts, argv[0]);
}

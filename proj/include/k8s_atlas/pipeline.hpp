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

// End-to-end composition:
//   acquire -> split -> flatten -> parse -> build_graph -> assign_clusters
//   -> emit_dot
// Rendering is left to the caller (see render.hpp).

#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "k8s_atlas/builtin_config.hpp"
#include "k8s_atlas/cluster.hpp"
#include "k8s_atlas/config.hpp"
#include "k8s_atlas/diagnostics.hpp"
#include "k8s_atlas/dot.hpp"
#include "k8s_atlas/graph.hpp"
#include "k8s_atlas/ingest.hpp"
#include "k8s_atlas/resource.hpp"

namespace k8s_atlas {

/// Reads every source (directories expanded) and splits it into documents,
/// preserving (source position, index in stream) order.
inline std::vector<RawDocument> load_documents(const std::vector<SourceSpec>& inputs,
                                               std::istream& stdin_stream = std::cin) {
  std::vector<RawDocument> docs;
  for (const auto& input : inputs) {
    for (const auto& source : expand_source(input)) {
      auto split = split_documents(acquire(source, stdin_stream), source);
      std::move(split.begin(), split.end(), std::back_inserter(docs));
    }
  }
  return docs;
}

/// Flattens List envelopes and parses each manifest. Documents that are not
/// mappings are skipped with a warning.
inline std::vector<Resource> load_resources(const std::vector<RawDocument>& docs,
                                            const KindRegistry& registry,
                                            const VisualConfig& config, Diagnostics* diag = nullptr) {
  std::vector<Resource> resources;
  for (const auto& doc : docs) {
    if (!doc.tree.IsMap()) {
      if (diag)
        diag->warn(describe(doc.origin) + ": document " + std::to_string(doc.index_in_stream) +
                   " is not a mapping; skipped");
      continue;
    }
    for (const auto& item : flatten_lists(doc.tree)) {
      if (!item.IsMap()) {
        if (diag) diag->warn(describe(doc.origin) + ": List item is not a mapping; skipped");
        continue;
      }
      resources.push_back(parse_resource(item, registry, config, diag, doc.origin));
    }
  }
  return resources;
}

/// Built-in config merged with each file in order (later files win).
inline VisualConfig load_config(const std::vector<std::filesystem::path>& paths,
                                Diagnostics* diag = nullptr) {
  VisualConfig config = builtin_config();
  for (const auto& p : paths) config = merge(config, load_config_file(p, diag));
  return config;
}

/// Icon directory: $K8S_ATLAS_ICONS, then <exe>/../share/k8s-atlas/icons,
/// then the compiled-in default (if any).
inline std::filesystem::path locate_icon_dir(const std::filesystem::path& executable = {}) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (const char* env = std::getenv("K8S_ATLAS_ICONS"); env && *env) return fs::path(env);
  if (!executable.empty()) {
    auto candidate = fs::absolute(executable, ec).parent_path().parent_path() / "share" /
                     "k8s-atlas" / "icons";
    if (fs::is_directory(candidate, ec)) return candidate;
  }
#ifdef K8S_ATLAS_DEFAULT_ICON_DIR
  if (fs::is_directory(K8S_ATLAS_DEFAULT_ICON_DIR, ec)) return fs::path(K8S_ATLAS_DEFAULT_ICON_DIR);
#endif
  return {};
}

struct PipelineOptions {
  std::vector<SourceSpec> inputs;
  std::vector<std::filesystem::path> config_paths;
  bool cluster_frame = false;
  std::filesystem::path icon_dir;
};

struct PipelineResult {
  VisualConfig config;
  ResourceGraph graph;
  ClusterTree tree;
  DotDocument dot;
};

/// Graph, clusters and DOT for already-parsed resources.
inline PipelineResult diagram_resources(std::vector<Resource> resources, VisualConfig config,
                                        bool cluster_frame, const std::filesystem::path& icon_dir,
                                        Diagnostics* diag = nullptr) {
  PipelineResult result;
  result.graph = build_graph(std::move(resources), config, builtin_registry(), diag);
  result.tree = assign_clusters(result.graph, config, cluster_frame);
  result.dot = emit_dot(result.graph, result.tree, EmitOptions{icon_dir, diag});
  result.config = std::move(config);
  return result;
}

/// Whole pipeline from sources to DOT. A live-cluster source turns the
/// Kubernetes cluster frame on.
inline PipelineResult run_pipeline(const PipelineOptions& options, Diagnostics* diag = nullptr,
                                   std::istream& stdin_stream = std::cin) {
  auto config = load_config(options.config_paths, diag);
  const auto docs = load_documents(options.inputs, stdin_stream);
  auto resources = load_resources(docs, builtin_registry(), config, diag);
  const bool frame = options.cluster_frame ||
                     std::any_of(options.inputs.begin(), options.inputs.end(), [](const SourceSpec& s) {
                       return s.kind == SourceKind::LiveCluster;
                     });
  return diagram_resources(std::move(resources), std::move(config), frame, options.icon_dir, diag);
}

}  // namespace k8s_atlas

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

// Manifest acquisition: reading files and stdin, shelling out to helm,
// kustomize, helmfile and kubectl, and splitting the resulting YAML streams
// into single documents.

#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "k8s_atlas/errors.hpp"
#include "k8s_atlas/node_ref.hpp"
#include "k8s_atlas/process.hpp"

namespace k8s_atlas {

enum class SourceKind { File, Stdin, HelmChart, Kustomization, Helmfile, LiveCluster };

struct SourceSpec {
  SourceKind kind = SourceKind::File;
  std::string locator;

  static SourceSpec file(std::string path) { return {SourceKind::File, std::move(path)}; }
  static SourceSpec stdin_source() { return {SourceKind::Stdin, {}}; }
  static SourceSpec helm_chart(std::string ref) { return {SourceKind::HelmChart, std::move(ref)}; }
  static SourceSpec kustomization(std::string dir) {
    return {SourceKind::Kustomization, std::move(dir)};
  }
  static SourceSpec helmfile(std::string path) { return {SourceKind::Helmfile, std::move(path)}; }
  static SourceSpec live_cluster(std::string what = "all") {
    return {SourceKind::LiveCluster, std::move(what)};
  }

  /// Stdin carries no locator; every other kind needs one.
  bool valid() const noexcept {
    return kind == SourceKind::Stdin ? locator.empty() : !locator.empty();
  }

  friend bool operator==(const SourceSpec&, const SourceSpec&) = default;
};

/// Human-readable origin used in diagnostics.
inline std::string describe(const SourceSpec& s) {
  switch (s.kind) {
    case SourceKind::File: return s.locator;
    case SourceKind::Stdin: return "<stdin>";
    case SourceKind::HelmChart: return "helm template " + s.locator;
    case SourceKind::Kustomization: return "kustomize build " + s.locator;
    case SourceKind::Helmfile: return "helmfile -f " + s.locator + " template";
    case SourceKind::LiveCluster: return "kubectl get " + s.locator + " -o yaml";
  }
  return s.locator;
}

struct RawDocument {
  std::string text;
  SourceSpec origin;
  int index_in_stream = 0;
  NodeRef tree;  // parsed form of `text`
};

/// The external command a non-file source runs, as (program, args).
inline std::pair<std::string, std::vector<std::string>> source_command(const SourceSpec& s) {
  switch (s.kind) {
    case SourceKind::HelmChart: return {"helm", {"template", s.locator}};
    case SourceKind::Kustomization: return {"kustomize", {"build", s.locator}};
    case SourceKind::Helmfile: return {"helmfile", {"-f", s.locator, "template"}};
    case SourceKind::LiveCluster: return {"kubectl", {"get", s.locator, "-o", "yaml"}};
    default: return {};
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return ss.str();
}

/// Fetches the raw YAML text of one source. No YAML is interpreted here.
inline std::string acquire(const SourceSpec& source, std::istream& stdin_stream = std::cin) {
  if (!source.valid()) throw IoError("invalid source locator for " + describe(source));
  switch (source.kind) {
    case SourceKind::File: {
      std::error_code ec;
      if (std::filesystem::is_directory(source.locator, ec))
        throw IoError("'" + source.locator + "' is a directory");
      return read_file(source.locator);
    }
    case SourceKind::Stdin:
      return std::string(std::istreambuf_iterator<char>(stdin_stream), {});
    default: {
      auto [program, args] = source_command(source);
      auto result = run_process(program, args);
      if (result.exit_code != 0)
        throw SubprocessFailed(describe_command(program, args), result.exit_code, result.err);
      return std::move(result.out);
    }
  }
}

/// Expands a File source naming a directory into its *.yaml / *.yml
/// entries in lexicographic order. Other sources pass through unchanged.
inline std::vector<SourceSpec> expand_source(const SourceSpec& source) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (source.kind != SourceKind::File || !fs::is_directory(source.locator, ec)) return {source};
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(source.locator)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".yaml" || ext == ".yml") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<SourceSpec> out;
  out.reserve(files.size());
  for (auto& f : files) out.push_back(SourceSpec::file(std::move(f)));
  return out;
}

/// Splits a multi-document stream. Empty documents are dropped and the
/// surviving ones are numbered from 0.
inline std::vector<RawDocument> split_documents(const std::string& stream, const SourceSpec& origin) {
  std::vector<YAML::Node> nodes;
  try {
    nodes = YAML::LoadAll(stream);
  } catch (const YAML::ParserException& e) {
    throw YamlSyntaxError(describe(origin), e.mark.line + 1, e.mark.column + 1, e.msg);
  }
  std::vector<RawDocument> docs;
  for (auto& node : nodes) {
    if (!node.IsDefined() || node.IsNull()) continue;
    YAML::Emitter em;
    em << node;
    docs.push_back(RawDocument{std::string(em.c_str()) + "\n", origin,
                               static_cast<int>(docs.size()), node});
  }
  return docs;
}

namespace detail {

inline std::string scalar_or_empty(const YAML::Node& node, const char* key) {
  if (!node.IsMap()) return {};
  const auto value = node[key];
  if (!value || !value.IsScalar()) return {};
  return value.Scalar();
}

inline void flatten_into(const YAML::Node& doc, std::vector<YAML::Node>& out) {
  if (scalar_or_empty(doc, "kind") != "List") {
    out.push_back(doc);
    return;
  }
  const auto items = doc["items"];
  if (!items || !items.IsSequence())
    throw MalformedList("document of kind List has no 'items' sequence");
  for (const auto& item : items) flatten_into(item, out);
}

}  // namespace detail

/// Unwraps `kind: List` envelopes (as produced by `kubectl get -o yaml`),
/// recursively. Anything else comes back as a singleton.
inline std::vector<YAML::Node> flatten_lists(const YAML::Node& doc) {
  std::vector<YAML::Node> out;
  detail::flatten_into(doc, out);
  return out;
}

}  // namespace k8s_atlas

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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "k8s_atlas/k8s_atlas.hpp"

namespace k8s_atlas::testing {

inline std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(K8S_ATLAS_FIXTURE_DIR) / rel;
}

inline std::filesystem::path icon_dir() { return K8S_ATLAS_TEST_ICON_DIR; }

inline std::vector<Resource> load_fixture(const std::vector<std::string>& files,
                                          const VisualConfig& config, Diagnostics* diag = nullptr) {
  std::vector<SourceSpec> inputs;
  for (const auto& f : files) inputs.push_back(SourceSpec::file(fixture(f).string()));
  return load_resources(load_documents(inputs), builtin_registry(), config, diag);
}

inline std::vector<Resource> parse_text(const std::string& yaml, const VisualConfig& config,
                                        Diagnostics* diag = nullptr) {
  return load_resources(split_documents(yaml, SourceSpec::stdin_source()), builtin_registry(), config,
                        diag);
}

inline const std::vector<std::string>& wordpress_files() {
  static const std::vector<std::string> files{"wordpress/mysql-deployment.yaml",
                                              "wordpress/secret.yaml",
                                              "wordpress/wordpress-deployment.yaml"};
  return files;
}

inline ResourceId rid(std::string api, std::string kind, std::optional<std::string> ns, std::string name) {
  return ResourceId{std::move(api), std::move(kind), std::move(ns), std::move(name)};
}

/// Edges as "kind:SrcKind/src->DstKind/dst" strings, for readable asserts.
inline std::multiset<std::string> edge_strings(const ResourceGraph& g) {
  std::multiset<std::string> out;
  for (const auto& e : g.edges)
    out.insert(std::string(to_string(e.kind)) + ":" + e.source.kind + "/" + e.source.name + "->" +
               e.target.kind + "/" + e.target.name);
  return out;
}

}  // namespace k8s_atlas::testing

namespace k8s_atlas {
/// Readable gtest output for ids.
inline void PrintTo(const ResourceId& id, std::ostream* os) { *os << to_string(id); }
}  // namespace k8s_atlas

namespace k8s_atlas::testing {

/// Value-level YAML equality (key order of mappings ignored).
inline bool yaml_equal(const YAML::Node& a, const YAML::Node& b) {
  if (a.Type() != b.Type()) return false;
  switch (a.Type()) {
    case YAML::NodeType::Scalar: return a.Scalar() == b.Scalar();
    case YAML::NodeType::Sequence:
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!yaml_equal(a[i], b[i])) return false;
      return true;
    case YAML::NodeType::Map: {
      if (a.size() != b.size()) return false;
      for (const auto& kv : a) {
        const auto key = kv.first.as<std::string>();
        if (!b[key] || !yaml_equal(kv.second, b[key])) return false;
      }
      return true;
    }
    default: return true;
  }
}

/// Layout engine usable by tests: `dot` on PATH, else the pygraphviz shim
/// detected at configure time. Empty when neither exists.
inline std::string test_engine() {
  if (find_executable("dot")) return "dot";
#ifdef K8S_ATLAS_TEST_ENGINE
  return K8S_ATLAS_TEST_ENGINE;
#else
  return {};
#endif
}

/// Sets an environment variable for the lifetime of the guard.
class ScopedEnv {
 public:
  ScopedEnv(const char* name, const std::string& value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    ::setenv(name, value.c_str(), 1);
  }
  ~ScopedEnv() {
    if (old_) ::setenv(name_, old_->c_str(), 1);
    else ::unsetenv(name_);
  }
  ScopedEnv(const ScopedEnv&) = delete;
  ScopedEnv& operator=(const ScopedEnv&) = delete;

 private:
  const char* name_;
  std::optional<std::string> old_;
};

}  // namespace k8s_atlas::testing

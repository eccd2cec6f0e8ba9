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

// Declarative visual configuration: cluster rules, per-kind node mappings,
// created-node rules and reference edge rules. The YAML shape is
//
//   clusters:
//     - label: app
//       title: "Application: {}"
//       bgcolor: "#ECE8F6"
//   nodes:
//     Certificate/cert-manager.io/v1:
//       scope: Namespaced
//       custom_icon: certificate.png
//       nodes:
//         spec.secretName: {kind: Secret, apiVersion: v1}
//       edges:
//         spec.issuerRef.name:
//           kind: Issuer
//           apiVersion: cert-manager.io/v1
//           graph_attr: {color: black, style: solid, direction: up}
//
// An edge rule may omit `kind` when a created-node rule exists for the same
// field path; the created node's kind is used. `kind_field` names a sibling
// of the referenced value that carries the target kind (roleRef.kind,
// scaleTargetRef.kind); the rule's kind is then only the fallback.

#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "k8s_atlas/diagnostics.hpp"
#include "k8s_atlas/errors.hpp"
#include "k8s_atlas/ingest.hpp"

namespace k8s_atlas {

enum class Scope { Namespaced, Cluster };

inline std::string_view to_string(Scope s) {
  return s == Scope::Namespaced ? "Namespaced" : "Cluster";
}

enum class EdgeStyle { Solid, Dashed, Dotted };

inline std::string_view to_string(EdgeStyle s) {
  switch (s) {
    case EdgeStyle::Solid: return "solid";
    case EdgeStyle::Dashed: return "dashed";
    case EdgeStyle::Dotted: return "dotted";
  }
  return "solid";
}

enum class Direction { Down, Up };

inline std::string_view to_string(Direction d) { return d == Direction::Up ? "up" : "down"; }

struct EdgeAttrs {
  std::string color = "black";
  EdgeStyle style = EdgeStyle::Solid;
  std::optional<std::string> xlabel;
  std::optional<Direction> direction;

  friend bool operator==(const EdgeAttrs&, const EdgeAttrs&) = default;
};

struct EdgeRule {
  std::string field_path;
  std::string target_kind;
  std::string target_api_version;
  EdgeAttrs attrs;
  std::optional<std::string> kind_field;

  friend bool operator==(const EdgeRule&, const EdgeRule&) = default;
};

struct CreatedNodeRule {
  std::string field_path;
  std::string target_kind;
  std::string target_api_version;

  friend bool operator==(const CreatedNodeRule&, const CreatedNodeRule&) = default;
};

struct ClusterRule {
  std::string label;
  std::string title_template = "{}";
  std::optional<std::string> bgcolor;

  friend bool operator==(const ClusterRule&, const ClusterRule&) = default;
};

struct NodeMapping {
  std::string kind_key;
  std::optional<Scope> scope;
  std::optional<std::string> custom_icon;
  std::vector<CreatedNodeRule> created_nodes;
  std::vector<EdgeRule> edges;

  friend bool operator==(const NodeMapping&, const NodeMapping&) = default;
};

struct VisualConfig {
  std::vector<ClusterRule> cluster_rules;
  std::map<std::string, NodeMapping> node_mappings;

  bool empty() const noexcept { return cluster_rules.empty() && node_mappings.empty(); }

  friend bool operator==(const VisualConfig&, const VisualConfig&) = default;
};

/// Splits "apps/v1" into {"apps", "v1"}; core versions have an empty group.
inline std::pair<std::string, std::string> split_api_version(std::string_view api_version) {
  const auto slash = api_version.rfind('/');
  if (slash == std::string_view::npos) return {"", std::string(api_version)};
  return {std::string(api_version.substr(0, slash)), std::string(api_version.substr(slash + 1))};
}

inline std::string api_group(std::string_view api_version) {
  return split_api_version(api_version).first;
}

inline std::string make_kind_key(std::string_view kind, std::string_view api_version) {
  return std::string(kind) + "/" + std::string(api_version);
}

/// Splits a kind key "Kind/group/version" or "Kind/version" into
/// {kind, apiVersion}. Returns nullopt when malformed.
inline std::optional<std::pair<std::string, std::string>> split_kind_key(std::string_view key) {
  const auto slash = key.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 >= key.size()) return std::nullopt;
  auto kind = std::string(key.substr(0, slash));
  auto api = std::string(key.substr(slash + 1));
  if (std::count(api.begin(), api.end(), '/') > 1 || api.front() == '/' || api.back() == '/')
    return std::nullopt;
  return std::pair{std::move(kind), std::move(api)};
}

/// Well-formed field paths are non-empty with no empty segments.
inline bool valid_field_path(std::string_view path) {
  if (path.empty() || path.front() == '.' || path.back() == '.') return false;
  return path.find("..") == std::string_view::npos;
}

inline bool valid_hex_color(std::string_view color) {
  static const std::regex hex("#[0-9a-fA-F]{6}");
  return std::regex_match(color.begin(), color.end(), hex);
}

inline std::size_t count_placeholders(std::string_view tmpl) {
  std::size_t n = 0;
  for (auto pos = tmpl.find("{}"); pos != std::string_view::npos; pos = tmpl.find("{}", pos + 2)) ++n;
  return n;
}

namespace detail {

inline std::string require_scalar(const YAML::Node& node, const std::string& path) {
  if (!node.IsScalar()) throw ConfigSchemaError(path, "expected a string");
  return node.Scalar();
}

inline std::optional<std::string> optional_scalar(const YAML::Node& map, const char* key,
                                                  const std::string& path) {
  const auto node = map[key];
  if (!node || node.IsNull()) return std::nullopt;
  return require_scalar(node, path + "." + key);
}

inline Scope parse_scope(const YAML::Node& node, const std::string& path) {
  const auto text = require_scalar(node, path);
  if (text == "Namespaced") return Scope::Namespaced;
  if (text == "Cluster") return Scope::Cluster;
  throw ConfigSchemaError(path, "scope must be Namespaced or Cluster, got '" + text + "'");
}

inline EdgeAttrs parse_graph_attr(const YAML::Node& node, const std::string& path,
                                  Diagnostics* diag) {
  EdgeAttrs attrs;
  if (!node || node.IsNull()) return attrs;
  if (!node.IsMap()) throw ConfigSchemaError(path, "expected a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    const auto sub = path + "." + key;
    if (key == "color") {
      attrs.color = require_scalar(kv.second, sub);
    } else if (key == "style") {
      const auto s = require_scalar(kv.second, sub);
      if (s == "solid") attrs.style = EdgeStyle::Solid;
      else if (s == "dashed") attrs.style = EdgeStyle::Dashed;
      else if (s == "dotted") attrs.style = EdgeStyle::Dotted;
      else throw ConfigSchemaError(sub, "style must be solid, dashed or dotted");
    } else if (key == "xlabel") {
      attrs.xlabel = require_scalar(kv.second, sub);
    } else if (key == "direction") {
      const auto d = require_scalar(kv.second, sub);
      if (d == "up") attrs.direction = Direction::Up;
      else if (d == "down") attrs.direction = Direction::Down;
      else throw ConfigSchemaError(sub, "direction must be up or down");
    } else if (diag) {
      diag->warn("config " + sub + ": unsupported edge attribute ignored");
    }
  }
  return attrs;
}

inline NodeMapping parse_node_mapping(const std::string& key, const YAML::Node& node,
                                      Diagnostics* diag) {
  const std::string path = "nodes." + key;
  if (!split_kind_key(key))
    throw ConfigSchemaError(path, "kind key must look like Kind/version or Kind/group/version");
  NodeMapping mapping;
  mapping.kind_key = key;
  if (!node || node.IsNull()) return mapping;
  if (!node.IsMap()) throw ConfigSchemaError(path, "expected a mapping");

  for (const auto& kv : node) {
    const auto field = kv.first.as<std::string>();
    const auto sub = path + "." + field;
    if (field == "scope") {
      mapping.scope = parse_scope(kv.second, sub);
    } else if (field == "custom_icon") {
      mapping.custom_icon = require_scalar(kv.second, sub);
    } else if (field == "nodes") {
      if (kv.second.IsNull()) continue;
      if (!kv.second.IsMap()) throw ConfigSchemaError(sub, "expected a mapping of field paths");
      for (const auto& rule : kv.second) {
        const auto fp = rule.first.as<std::string>();
        const auto rp = sub + "." + fp;
        if (!valid_field_path(fp)) throw ConfigSchemaError(rp, "malformed field path");
        if (!rule.second.IsMap()) throw ConfigSchemaError(rp, "expected a mapping");
        auto kind = optional_scalar(rule.second, "kind", rp);
        if (!kind) throw ConfigSchemaError(rp, "created node needs a kind");
        auto api = optional_scalar(rule.second, "apiVersion", rp).value_or("v1");
        mapping.created_nodes.push_back({fp, *kind, api});
      }
    } else if (field == "edges") {
      if (kv.second.IsNull()) continue;
      if (!kv.second.IsMap()) throw ConfigSchemaError(sub, "expected a mapping of field paths");
      for (const auto& rule : kv.second) {
        const auto fp = rule.first.as<std::string>();
        const auto rp = sub + "." + fp;
        if (!valid_field_path(fp)) throw ConfigSchemaError(rp, "malformed field path");
        if (!rule.second.IsMap()) throw ConfigSchemaError(rp, "expected a mapping");
        EdgeRule er;
        er.field_path = fp;
        er.attrs = parse_graph_attr(rule.second["graph_attr"], rp + ".graph_attr", diag);
        er.kind_field = optional_scalar(rule.second, "kind_field", rp);
        auto kind = optional_scalar(rule.second, "kind", rp);
        auto api = optional_scalar(rule.second, "apiVersion", rp);
        if (!kind) {
          // Fall back to a created-node rule on the same path.
          auto it = std::find_if(mapping.created_nodes.begin(), mapping.created_nodes.end(),
                                 [&](const CreatedNodeRule& c) { return c.field_path == fp; });
          if (it == mapping.created_nodes.end())
            throw ConfigSchemaError(rp, "edge needs a kind (no created node on this path)");
          kind = it->target_kind;
          if (!api) api = it->target_api_version;
        }
        er.target_kind = *kind;
        er.target_api_version = api.value_or("v1");
        if (std::any_of(mapping.edges.begin(), mapping.edges.end(),
                        [&](const EdgeRule& e) { return e.field_path == fp; }))
          throw ConfigSchemaError(rp, "duplicate edge rule for field path");
        mapping.edges.push_back(std::move(er));
      }
    } else if (diag) {
      diag->warn("config " + sub + ": unknown key ignored");
    }
  }
  return mapping;
}

}  // namespace detail

/// Parses a configuration document. Unknown top-level keys are warnings.
inline VisualConfig parse_config(const std::string& text, Diagnostics* diag = nullptr) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw YamlSyntaxError("config", e.mark.line + 1, e.mark.column + 1, e.msg);
  }
  VisualConfig config;
  if (!root || root.IsNull()) return config;
  if (!root.IsMap()) throw ConfigSchemaError("<root>", "expected a mapping");

  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (key == "clusters") {
      if (kv.second.IsNull()) continue;
      if (!kv.second.IsSequence()) throw ConfigSchemaError("clusters", "expected a list");
      std::size_t i = 0;
      for (const auto& item : kv.second) {
        const auto path = "clusters[" + std::to_string(i++) + "]";
        if (!item.IsMap()) throw ConfigSchemaError(path, "expected a mapping");
        ClusterRule rule;
        auto label = detail::optional_scalar(item, "label", path);
        if (!label || label->empty()) throw ConfigSchemaError(path, "cluster rule needs a label");
        rule.label = *label;
        if (auto title = detail::optional_scalar(item, "title", path)) rule.title_template = *title;
        if (count_placeholders(rule.title_template) != 1)
          throw ConfigSchemaError(path + ".title", "title must contain exactly one {}");
        rule.bgcolor = detail::optional_scalar(item, "bgcolor", path);
        if (rule.bgcolor && !valid_hex_color(*rule.bgcolor))
          throw ConfigSchemaError(path + ".bgcolor", "expected #RRGGBB, got '" + *rule.bgcolor + "'");
        if (std::any_of(config.cluster_rules.begin(), config.cluster_rules.end(),
                        [&](const ClusterRule& r) { return r.label == rule.label; }))
          throw ConfigSchemaError(path + ".label", "duplicate cluster label '" + rule.label + "'");
        config.cluster_rules.push_back(std::move(rule));
      }
    } else if (key == "nodes") {
      if (kv.second.IsNull()) continue;
      if (!kv.second.IsMap()) throw ConfigSchemaError("nodes", "expected a mapping");
      for (const auto& m : kv.second) {
        const auto kind_key = m.first.as<std::string>();
        config.node_mappings[kind_key] = detail::parse_node_mapping(kind_key, m.second, diag);
      }
    } else if (diag) {
      diag->warn("config: unknown top-level key '" + key + "' ignored");
    }
  }
  return config;
}

/// Writes a configuration back in the shape parse_config reads.
inline std::string serialize_config(const VisualConfig& config) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  if (!config.cluster_rules.empty()) {
    out << YAML::Key << "clusters" << YAML::Value << YAML::BeginSeq;
    for (const auto& r : config.cluster_rules) {
      out << YAML::BeginMap << YAML::Key << "label" << YAML::Value << r.label << YAML::Key
          << "title" << YAML::Value << YAML::DoubleQuoted << r.title_template;
      if (r.bgcolor) out << YAML::Key << "bgcolor" << YAML::Value << YAML::DoubleQuoted << *r.bgcolor;
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
  }
  if (!config.node_mappings.empty()) {
    out << YAML::Key << "nodes" << YAML::Value << YAML::BeginMap;
    for (const auto& [key, m] : config.node_mappings) {
      out << YAML::Key << key << YAML::Value << YAML::BeginMap;
      if (m.scope) out << YAML::Key << "scope" << YAML::Value << std::string(to_string(*m.scope));
      if (m.custom_icon) out << YAML::Key << "custom_icon" << YAML::Value << *m.custom_icon;
      if (!m.created_nodes.empty()) {
        out << YAML::Key << "nodes" << YAML::Value << YAML::BeginMap;
        for (const auto& c : m.created_nodes)
          out << YAML::Key << c.field_path << YAML::Value << YAML::BeginMap << YAML::Key << "kind"
              << YAML::Value << c.target_kind << YAML::Key << "apiVersion" << YAML::Value
              << c.target_api_version << YAML::EndMap;
        out << YAML::EndMap;
      }
      if (!m.edges.empty()) {
        out << YAML::Key << "edges" << YAML::Value << YAML::BeginMap;
        for (const auto& e : m.edges) {
          out << YAML::Key << e.field_path << YAML::Value << YAML::BeginMap;
          out << YAML::Key << "kind" << YAML::Value << e.target_kind;
          out << YAML::Key << "apiVersion" << YAML::Value << e.target_api_version;
          if (e.kind_field) out << YAML::Key << "kind_field" << YAML::Value << *e.kind_field;
          out << YAML::Key << "graph_attr" << YAML::Value << YAML::BeginMap;
          out << YAML::Key << "color" << YAML::Value << YAML::DoubleQuoted << e.attrs.color;
          out << YAML::Key << "style" << YAML::Value << std::string(to_string(e.attrs.style));
          if (e.attrs.xlabel)
            out << YAML::Key << "xlabel" << YAML::Value << YAML::DoubleQuoted << *e.attrs.xlabel;
          if (e.attrs.direction)
            out << YAML::Key << "direction" << YAML::Value << std::string(to_string(*e.attrs.direction));
          out << YAML::EndMap << YAML::EndMap;
        }
        out << YAML::EndMap;
      }
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

/// Right-biased merge: user node mappings replace builtin ones wholesale and
/// user cluster rules nest inside the builtin ones. A user cluster rule that
/// reuses an earlier label moves that label to the user's position.
inline VisualConfig merge(const VisualConfig& builtin, const VisualConfig& user) {
  VisualConfig out = builtin;
  for (const auto& [key, mapping] : user.node_mappings) out.node_mappings[key] = mapping;
  for (const auto& rule : user.cluster_rules) {
    std::erase_if(out.cluster_rules, [&](const ClusterRule& r) { return r.label == rule.label; });
    out.cluster_rules.push_back(rule);
  }
  return out;
}

/// Loads a config file; relative custom_icon paths are resolved against the
/// file's directory.
inline VisualConfig load_config_file(const std::filesystem::path& path, Diagnostics* diag = nullptr) {
  auto config = parse_config(read_file(path), diag);
  const auto base = std::filesystem::absolute(path).parent_path();
  for (auto& [key, mapping] : config.node_mappings) {
    if (mapping.custom_icon && std::filesystem::path(*mapping.custom_icon).is_relative())
      mapping.custom_icon = (base / *mapping.custom_icon).lexically_normal().string();
  }
  return config;
}

/// Finds the node mapping for a kind: exact "Kind/apiVersion" key first,
/// then any key with the same kind and API group (version-tolerant).
inline const NodeMapping* find_mapping(const VisualConfig& config, std::string_view kind,
                                       std::string_view api_version) {
  if (auto it = config.node_mappings.find(make_kind_key(kind, api_version));
      it != config.node_mappings.end())
    return &it->second;
  const auto group = api_group(api_version);
  const NodeMapping* best = nullptr;
  for (const auto& [key, mapping] : config.node_mappings) {
    auto parts = split_kind_key(key);
    if (parts && parts->first == kind && api_group(parts->second) == group) best = &mapping;
  }
  return best;
}

}  // namespace k8s_atlas

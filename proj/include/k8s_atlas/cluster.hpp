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
#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "k8s_atlas/config.hpp"
#include "k8s_atlas/graph.hpp"

namespace k8s_atlas {

/// Nesting levels, outermost first. Custom levels (one per user cluster
/// rule) sit innermost, in config order.
enum class ClusterLevel { K8sCluster, Namespace, Instance, HelmChart, Application, Component, Custom };

inline std::string_view to_string(ClusterLevel l) {
  switch (l) {
    case ClusterLevel::K8sCluster: return "k8s-cluster";
    case ClusterLevel::Namespace: return "namespace";
    case ClusterLevel::Instance: return "instance";
    case ClusterLevel::HelmChart: return "helm-chart";
    case ClusterLevel::Application: return "application";
    case ClusterLevel::Component: return "component";
    case ClusterLevel::Custom: return "custom";
  }
  return "custom";
}

enum class Border { Solid, Dashed };

struct ClusterStyle {
  std::optional<std::string> bgcolor;
  Border border = Border::Solid;

  friend bool operator==(const ClusterStyle&, const ClusterStyle&) = default;
};

struct ClusterNode {
  ClusterLevel level = ClusterLevel::Custom;
  std::string key;        // namespace name or label value
  std::string label_key;  // label that produced this cluster, empty for system levels
  int rule_index = -1;    // position of the user rule for Custom levels
  std::string title;
  ClusterStyle style;
  std::vector<ClusterNode> children;
  std::vector<ResourceId> members;
};

/// The root is not drawn; its members are the nodes outside every cluster.
struct ClusterTree {
  std::vector<ClusterNode> children;
  std::vector<ResourceId> members;
};

/// Template with its single `{}` replaced by the label value.
inline std::string render_title(const ClusterRule& rule, std::string_view label_value) {
  auto title = rule.title_template;
  if (const auto pos = title.find("{}"); pos != std::string::npos)
    title.replace(pos, 2, label_value);
  return title;
}

struct LogicalLevel {
  ClusterLevel level;
  std::array<std::string_view, 2> label_keys;  // precedence order; empty = none
  std::string_view title;
  std::string_view bgcolor;
};

/// Label keys follow the Kubernetes recommended-labels convention.
inline constexpr std::array<LogicalLevel, 4> kLogicalLevels{{
    {ClusterLevel::Instance, {"app.kubernetes.io/instance", ""}, "K8s instance: {}", "#FFF8E1"},
    {ClusterLevel::HelmChart, {"helm.sh/chart", ""}, "Helm chart: {}", "#E8F5E9"},
    {ClusterLevel::Application, {"app.kubernetes.io/name", "app"}, "K8s application: {}", "#F3E5F5"},
    {ClusterLevel::Component, {"app.kubernetes.io/component", "tier"}, "K8s component: {}", "#E3F2FD"},
}};

inline constexpr std::string_view kClusterFrameColor = "#E5EEFB";

namespace detail {

inline auto cluster_order(const ClusterNode& n) {
  return std::tie(n.level, n.rule_index, n.key);
}

inline ClusterNode& child_for(std::vector<ClusterNode>& children, const ClusterNode& proto) {
  for (auto& c : children)
    if (c.level == proto.level && c.rule_index == proto.rule_index && c.key == proto.key) return c;
  children.push_back(proto);
  return children.back();
}

inline void sort_tree(std::vector<ClusterNode>& children) {
  std::sort(children.begin(), children.end(), [](const ClusterNode& a, const ClusterNode& b) {
    return cluster_order(a) < cluster_order(b);
  });
  for (auto& c : children) {
    std::sort(c.members.begin(), c.members.end());
    sort_tree(c.children);
  }
}

}  // namespace detail

/// Cluster path (outermost first) for one node.
inline std::vector<ClusterNode> cluster_path(const ResourceId& id, const GraphNode& node,
                                             const VisualConfig& config, bool top_level) {
  std::vector<ClusterNode> path;
  if (top_level) {
    ClusterNode c;
    c.level = ClusterLevel::K8sCluster;
    c.key = "kubernetes";
    c.title = "Kubernetes cluster";
    c.style = {std::string(kClusterFrameColor), Border::Solid};
    path.push_back(std::move(c));
  }
  if (id.ns) {
    ClusterNode c;
    c.level = ClusterLevel::Namespace;
    c.key = *id.ns;
    c.title = *id.ns;
    c.style = {std::nullopt, Border::Dashed};
    path.push_back(std::move(c));
  }

  const auto& labels = node.labels();
  std::set<std::string_view> claimed;
  for (const auto& rule : config.cluster_rules) claimed.insert(rule.label);

  for (const auto& lvl : kLogicalLevels) {
    for (const auto key : lvl.label_keys) {
      if (key.empty()) continue;
      auto it = labels.find(std::string(key));
      if (it == labels.end() || it->second.empty()) continue;
      // A user rule on the same label replaces this level.
      if (!claimed.contains(key)) {
        ClusterNode c;
        c.level = lvl.level;
        c.key = it->second;
        c.label_key = key;
        c.title = render_title(ClusterRule{std::string(key), std::string(lvl.title), {}}, it->second);
        c.style = {std::string(lvl.bgcolor), Border::Solid};
        path.push_back(std::move(c));
      }
      break;
    }
  }

  for (std::size_t i = 0; i < config.cluster_rules.size(); ++i) {
    const auto& rule = config.cluster_rules[i];
    auto it = labels.find(rule.label);
    if (it == labels.end() || it->second.empty()) continue;
    ClusterNode c;
    c.level = ClusterLevel::Custom;
    c.key = it->second;
    c.label_key = rule.label;
    c.rule_index = static_cast<int>(i);
    c.title = render_title(rule, it->second);
    c.style = {rule.bgcolor, Border::Solid};
    path.push_back(std::move(c));
  }
  return path;
}

/// Assigns every graph node to its deepest cluster. Levels without a
/// matching label are skipped, so no cluster is ever empty.
inline ClusterTree assign_clusters(const ResourceGraph& graph, const VisualConfig& config,
                                   bool top_level) {
  ClusterTree tree;
  for (const auto& [id, node] : graph.nodes) {
    auto path = cluster_path(id, node, config, top_level);
    if (path.empty()) {
      tree.members.push_back(id);
      continue;
    }
    auto* level = &tree.children;
    ClusterNode* current = nullptr;
    for (const auto& proto : path) {
      current = &detail::child_for(*level, proto);
      level = &current->children;
    }
    current->members.push_back(id);
  }
  std::sort(tree.members.begin(), tree.members.end());
  detail::sort_tree(tree.children);
  return tree;
}

inline std::size_t cluster_depth(const ClusterNode& node) {
  std::size_t deepest = 0;
  for (const auto& c : node.children) deepest = std::max(deepest, cluster_depth(c));
  return deepest + 1;
}

/// Number of nested cluster levels along the deepest path (0 = no clusters).
inline std::size_t cluster_depth(const ClusterTree& tree) {
  std::size_t deepest = 0;
  for (const auto& c : tree.children) deepest = std::max(deepest, cluster_depth(c));
  return deepest;
}

}  // namespace k8s_atlas

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

// Resource graph construction. Nodes are the parsed resources plus
// placeholders for referenced-but-undeclared objects; edges come in three
// flavours:
//
//   Reference  field in the source names the target     (solid by default)
//   Selector   label selector of the source matches      (dashed)
//   Owner      target lists the source in ownerReferences (dotted)
//
// Passes run in a fixed order (created nodes, references, selectors,
// owners) over resources sorted by identity, so the result does not depend
// on input order.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "k8s_atlas/config.hpp"
#include "k8s_atlas/diagnostics.hpp"
#include "k8s_atlas/node_ref.hpp"
#include "k8s_atlas/resource.hpp"
#include "k8s_atlas/selector.hpp"

namespace k8s_atlas {

enum class EdgeKind { Reference, Selector, Owner };

inline std::string_view to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Reference: return "reference";
    case EdgeKind::Selector: return "selector";
    case EdgeKind::Owner: return "owner";
  }
  return "reference";
}

inline EdgeAttrs default_attrs(EdgeKind k) {
  EdgeAttrs a;
  a.color = "black";
  a.style = k == EdgeKind::Reference ? EdgeStyle::Solid
            : k == EdgeKind::Selector ? EdgeStyle::Dashed
                                      : EdgeStyle::Dotted;
  return a;
}

struct Edge {
  ResourceId source;
  ResourceId target;
  EdgeKind kind = EdgeKind::Reference;
  EdgeAttrs attrs;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sort/dedup key: (source, target, kind, xlabel).
inline auto edge_key(const Edge& e) {
  return std::tie(e.source, e.target, e.kind, e.attrs.xlabel);
}

struct GraphNode {
  KindDescriptor descriptor;
  std::optional<Resource> resource;  // nullopt for placeholders

  bool is_placeholder() const noexcept { return !resource.has_value(); }

  const Labels& labels() const {
    static const Labels kNone;
    return resource ? resource->labels : kNone;
  }
};

struct ResourceGraph {
  std::map<ResourceId, GraphNode> nodes;
  std::vector<Edge> edges;

  std::size_t count_kind(std::string_view kind) const {
    return static_cast<std::size_t>(std::count_if(
        nodes.begin(), nodes.end(), [&](const auto& kv) { return kv.first.kind == kind; }));
  }
};

/// What every graph pass needs besides the graph itself.
struct GraphContext {
  const KindRegistry& registry;
  const VisualConfig& config;
  Diagnostics* diag = nullptr;

  KindDescriptor classify(std::string_view kind, std::string_view api_version) const {
    return classify_kind(kind, api_version, registry, config, diag);
  }
  void warn(std::string message) const {
    if (diag) diag->warn(std::move(message));
  }
};

namespace detail {

inline std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> segments;
  std::size_t start = 0;
  while (start <= path.size()) {
    const auto dot = path.find('.', start);
    const auto end = dot == std::string_view::npos ? path.size() : dot;
    segments.emplace_back(path.substr(start, end - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return segments;
}

/// A value reached by a field path together with the mapping holding it.
struct PathHit {
  std::string value;
  NodeRef parent;
};

inline void walk_path(const YAML::Node& node, const YAML::Node& parent,
                      const std::vector<std::string>& segments, std::size_t i,
                      std::string_view path, std::vector<PathHit>& out, Diagnostics* diag) {
  if (!node.IsDefined()) return;
  if (i == segments.size()) {
    if (node.IsScalar()) {
      out.push_back({node.Scalar(), parent});
    } else if (diag) {
      diag->warn("field path " + std::string(path) + " ends at a non-string value; skipped");
    }
    return;
  }
  const auto& seg = segments[i];
  if (seg == "*") {
    if (!node.IsSequence()) return;
    for (const auto& element : node) walk_path(element, node, segments, i + 1, path, out, diag);
    return;
  }
  if (!node.IsMap()) return;
  const auto child = node[seg];
  if (!child) return;
  walk_path(child, node, segments, i + 1, path, out, diag);
}

inline std::vector<PathHit> resolve_path_hits(const YAML::Node& body, std::string_view path,
                                              Diagnostics* diag) {
  std::vector<PathHit> out;
  if (!valid_field_path(path)) return out;
  walk_path(body, YAML::Node(), split_path(path), 0, path, out, diag);
  return out;
}

inline YAML::Node sub_node(const YAML::Node& body, std::string_view path) {
  YAML::Node node = body;
  for (const auto& seg : split_path(path)) {
    if (!node.IsMap()) return YAML::Node(YAML::NodeType::Undefined);
    const auto child = node[seg];
    if (!child) return YAML::Node(YAML::NodeType::Undefined);
    node.reset(child);
  }
  return node;
}

}  // namespace detail

/// All string values reached by walking a dot-separated path; `*` fans out
/// over sequence elements. Missing segments yield nothing.
inline std::vector<std::string> resolve_field_path(const YAML::Node& body, std::string_view path,
                                                   Diagnostics* diag = nullptr) {
  std::vector<std::string> values;
  for (auto& hit : detail::resolve_path_hits(body, path, diag)) values.push_back(std::move(hit.value));
  return values;
}

/// Returns the node for (kind, name) as seen from a resource in
/// `source_ns`, inserting a placeholder when nothing matches. Namespaced
/// targets resolve within the source namespace; cluster-scoped ones
/// globally. A namespaced target seen from a cluster-scoped source matches
/// by name in any namespace, else lands in "default".
inline ResourceId resolve_target(std::string_view kind, std::string_view api_version,
                                 std::string_view name, const std::optional<std::string>& source_ns,
                                 ResourceGraph& graph, const GraphContext& ctx) {
  const auto descriptor = ctx.classify(kind, api_version);
  const auto group = api_group(api_version.empty() ? descriptor.api_version : api_version);

  const auto find_in = [&](const std::optional<std::string>& ns) -> std::optional<ResourceId> {
    ResourceId probe{"", std::string(kind), ns, std::string(name)};
    for (auto it = graph.nodes.lower_bound(probe); it != graph.nodes.end(); ++it) {
      const auto& id = it->first;
      if (id.ns != ns || id.kind != kind || id.name != name) break;
      if (api_group(id.api_version) == group) return id;
    }
    return std::nullopt;
  };

  std::optional<std::string> ns;
  if (descriptor.scope == Scope::Namespaced) {
    if (source_ns) {
      ns = source_ns;
    } else {
      for (const auto& [id, node] : graph.nodes)
        if (id.ns && id.kind == kind && id.name == name && api_group(id.api_version) == group)
          return id;
      ns = std::string(kDefaultNamespace);
    }
  }
  if (auto found = find_in(ns)) return *found;

  ResourceId id{api_version.empty() ? descriptor.api_version : std::string(api_version),
                std::string(kind), ns, std::string(name)};
  graph.nodes.emplace(id, GraphNode{descriptor, std::nullopt});
  return id;
}

namespace detail {

inline std::string sibling_scalar(const YAML::Node& parent, const std::string& key) {
  if (!parent.IsDefined() || !parent.IsMap()) return {};
  const auto v = parent[key];
  return v && v.IsScalar() ? v.Scalar() : std::string();
}

/// Target (kind, apiVersion) of a rule hit, honouring kind_field.
inline std::pair<std::string, std::string> rule_target(const EdgeRule& rule, const PathHit& hit,
                                                       const KindRegistry& registry) {
  if (!rule.kind_field) return {rule.target_kind, rule.target_api_version};
  auto kind = sibling_scalar(hit.parent, *rule.kind_field);
  if (kind.empty() || kind == rule.target_kind) return {rule.target_kind, rule.target_api_version};
  if (auto api = sibling_scalar(hit.parent, "apiVersion"); !api.empty()) return {kind, api};
  if (hit.parent.IsMap() && hit.parent["apiGroup"]) {
    const auto group = sibling_scalar(hit.parent, "apiGroup");
    for (const auto& d : registry.descriptors())
      if (d.kind == kind && api_group(d.api_version) == group) return {kind, d.api_version};
    return {kind, group.empty() ? "v1" : group + "/v1"};
  }
  if (const auto* d = registry.lookup_kind(kind)) return {kind, d->api_version};
  return {kind, rule.target_api_version};
}

inline void add_edge(ResourceGraph& graph, Edge edge, const GraphContext& ctx) {
  if (edge.source == edge.target)
    ctx.warn(to_string(edge.source) + " references itself; self-edge kept");
  graph.edges.push_back(std::move(edge));
}

inline const std::vector<EdgeRule>& pod_rules(const GraphContext& ctx) {
  static const std::vector<EdgeRule> kNone;
  if (const auto* m = find_mapping(ctx.config, "Pod", "v1")) return m->edges;
  if (const auto* d = ctx.registry.lookup("Pod", "v1")) return d->builtin_edge_rules;
  return kNone;
}

}  // namespace detail

/// Reference edges for one resource. Workloads additionally run the pod
/// rules against their embedded pod template; those edges start at the
/// workload itself.
inline std::vector<Edge> infer_reference_edges(const Resource& resource,
                                               const std::vector<EdgeRule>& rules,
                                               ResourceGraph& graph, const GraphContext& ctx) {
  std::vector<Edge> edges;
  const auto apply = [&](const YAML::Node& body, const std::vector<EdgeRule>& rule_set) {
    for (const auto& rule : rule_set) {
      for (const auto& hit : detail::resolve_path_hits(body, rule.field_path, ctx.diag)) {
        if (hit.value.empty()) continue;
        auto [kind, api] = detail::rule_target(rule, hit, ctx.registry);
        auto target = resolve_target(kind, api, hit.value, resource.id.ns, graph, ctx);
        edges.push_back(Edge{resource.id, target, EdgeKind::Reference, rule.attrs});
      }
    }
  };
  apply(resource.body, rules);
  const auto descriptor = ctx.classify(resource.id.kind, resource.id.api_version);
  if (descriptor.pod_template_path) {
    const auto tmpl = detail::sub_node(resource.body, *descriptor.pod_template_path);
    if (tmpl.IsDefined() && tmpl.IsMap()) apply(tmpl, detail::pod_rules(ctx));
  }
  return edges;
}

/// Selector a resource carries, if its kind is selector-bearing.
inline std::optional<LabelSelector> resource_selector(const Resource& r, const GraphContext& ctx) {
  const auto spec = r.body["spec"];
  if (!spec || !spec.IsMap()) return std::nullopt;
  const auto group = api_group(r.id.api_version);
  if (r.id.kind == "Service" && group.empty()) return selector_from_map(spec["selector"]);
  std::optional<LabelSelector> sel;
  if (r.id.kind == "NetworkPolicy" && (group == "networking.k8s.io" || group == "extensions"))
    sel = selector_from_yaml(spec["podSelector"]);
  else if (r.id.kind == "PodDisruptionBudget" && group == "policy")
    sel = selector_from_yaml(spec["selector"]);
  else
    return std::nullopt;
  if (!sel) {
    ctx.warn(to_string(r.id) + ": malformed label selector ignored");
    return LabelSelector{};
  }
  return sel;
}

/// Labels a selector is matched against: a Pod's own labels, or a
/// workload's pod-template labels. nullopt for anything else.
inline std::optional<Labels> selectable_labels(const GraphNode& node) {
  if (!node.resource) return std::nullopt;
  const auto& r = *node.resource;
  if (r.id.kind == "Pod") return r.labels;
  if (!node.descriptor.pod_template_path || r.id.kind == "PodTemplate") return std::nullopt;
  Labels labels;
  const auto meta = detail::sub_node(r.body, *node.descriptor.pod_template_path + ".metadata.labels");
  if (meta.IsDefined() && meta.IsMap())
    for (const auto& kv : meta)
      if (kv.second.IsScalar()) labels[kv.first.as<std::string>()] = kv.second.Scalar();
  return labels;
}

/// Dashed edges from Services, NetworkPolicies and PodDisruptionBudgets to
/// the same-namespace Pods and workloads they select.
inline std::vector<Edge> infer_selector_edges(const ResourceGraph& graph, const GraphContext& ctx) {
  std::vector<Edge> edges;
  for (const auto& [id, node] : graph.nodes) {
    if (!node.resource) continue;
    const auto selector = resource_selector(*node.resource, ctx);
    if (!selector || selector->empty()) continue;
    std::size_t matched = 0;
    for (const auto& [tid, tnode] : graph.nodes) {
      if (tid.ns != id.ns || tid == id) continue;
      const auto labels = selectable_labels(tnode);
      if (!labels || !matches_selector(*selector, *labels)) continue;
      edges.push_back(Edge{id, tid, EdgeKind::Selector, default_attrs(EdgeKind::Selector)});
      ++matched;
    }
    if (matched == 0) ctx.warn(to_string(id) + ": selector matches no pod or workload");
  }
  return edges;
}

/// Dotted owner -> owned edges from metadata.ownerReferences. Owners are
/// matched by kind and name; absent owners become placeholders.
inline std::vector<Edge> infer_owner_edges(ResourceGraph& graph, const GraphContext& ctx) {
  std::vector<Edge> edges;
  std::vector<const Resource*> owned;
  for (const auto& [id, node] : graph.nodes)
    if (node.resource && !node.resource->owner_refs.empty()) owned.push_back(&*node.resource);
  for (const auto* r : owned) {
    for (const auto& o : r->owner_refs) {
      auto owner = resolve_target(o.kind, o.api_version, o.name, r->id.ns, graph, ctx);
      edges.push_back(Edge{owner, r->id, EdgeKind::Owner, default_attrs(EdgeKind::Owner)});
    }
  }
  return edges;
}

/// Builds the full graph. Duplicate identities collapse (first wins) and
/// the edge list comes out sorted and free of duplicates.
inline ResourceGraph build_graph(std::vector<Resource> resources, const VisualConfig& config,
                                 const KindRegistry& registry, Diagnostics* diag = nullptr) {
  const GraphContext ctx{registry, config, diag};
  ResourceGraph graph;
  for (auto& r : deduplicate(std::move(resources), diag)) {
    auto descriptor = ctx.classify(r.id.kind, r.id.api_version);
    auto id = r.id;
    graph.nodes.emplace(std::move(id), GraphNode{std::move(descriptor), std::move(r)});
  }

  // Passes below insert placeholders; iterate a snapshot of declared ids.
  std::vector<ResourceId> declared;
  for (const auto& [id, node] : graph.nodes) declared.push_back(id);

  for (const auto& id : declared) {
    const auto& r = *graph.nodes.at(id).resource;
    if (const auto* m = find_mapping(config, r.id.kind, r.id.api_version)) {
      for (const auto& rule : m->created_nodes)
        for (const auto& name : resolve_field_path(r.body, rule.field_path, diag))
          if (!name.empty())
            resolve_target(rule.target_kind, rule.target_api_version, name, r.id.ns, graph, ctx);
    }
  }

  std::vector<Edge> edges;
  for (const auto& id : declared) {
    // std::map insertions keep references valid.
    const auto& node = graph.nodes.at(id);
    for (auto& e : infer_reference_edges(*node.resource, node.descriptor.builtin_edge_rules, graph, ctx))
      edges.push_back(std::move(e));
  }
  for (auto& e : infer_selector_edges(graph, ctx)) edges.push_back(std::move(e));
  for (auto& e : infer_owner_edges(graph, ctx)) edges.push_back(std::move(e));

  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return edge_key(a) < edge_key(b); });
  for (auto& e : edges) {
    if (!graph.edges.empty() && edge_key(graph.edges.back()) == edge_key(e)) continue;
    detail::add_edge(graph, std::move(e), ctx);
  }
  return graph;
}

}  // namespace k8s_atlas

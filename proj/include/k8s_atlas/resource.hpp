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
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "k8s_atlas/builtin_config.hpp"
#include "k8s_atlas/config.hpp"
#include "k8s_atlas/diagnostics.hpp"
#include "k8s_atlas/errors.hpp"
#include "k8s_atlas/ingest.hpp"
#include "k8s_atlas/node_ref.hpp"

namespace k8s_atlas {

inline constexpr std::string_view kDefaultNamespace = "default";

/// Deduplication identity of a resource. Ordered by namespace first so that
/// cluster-scoped resources (no namespace) sort ahead of namespaced ones.
struct ResourceId {
  std::string api_version;
  std::string kind;
  std::optional<std::string> ns;
  std::string name;

  friend bool operator==(const ResourceId&, const ResourceId&) = default;
  friend std::strong_ordering operator<=>(const ResourceId& a, const ResourceId& b) {
    if (auto c = a.ns <=> b.ns; c != 0) return c;
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.api_version <=> b.api_version;
  }
};

inline std::string to_string(const ResourceId& id) {
  return id.kind + " " + (id.ns ? *id.ns + "/" : std::string()) + id.name + " (" +
         id.api_version + ")";
}

/// Stable textual key, unique per identity; used as the DOT node name.
inline std::string node_key(const ResourceId& id) {
  return id.api_version + "/" + id.kind + "/" + id.ns.value_or("") + "/" + id.name;
}

struct OwnerRef {
  std::string kind;
  std::string api_version;
  std::string name;
  std::optional<std::string> uid;

  friend bool operator==(const OwnerRef&, const OwnerRef&) = default;
};

using Labels = std::map<std::string, std::string>;

struct Resource {
  ResourceId id;
  Labels labels;
  std::vector<OwnerRef> owner_refs;
  NodeRef body;
  SourceSpec origin;
};

struct KindDescriptor {
  std::string kind;
  std::string api_version;  // preferred version for placeholders
  std::string kind_key;     // "Kind" for core kinds, "Kind/group/version" otherwise
  Scope scope = Scope::Namespaced;
  std::string alias;
  std::string icon_ref;
  std::vector<EdgeRule> builtin_edge_rules;
  std::optional<std::string> pod_template_path;  // workloads embedding a pod template
  std::vector<std::string> legacy_groups;
  bool fallback = false;
};

/// Immutable set of known kinds. Lookup is by kind and API group; the
/// version is ignored so that v1beta1/v1/v2 all resolve to one descriptor.
class KindRegistry {
 public:
  explicit KindRegistry(std::vector<KindDescriptor> descriptors)
      : descriptors_(std::move(descriptors)) {}

  const KindDescriptor* lookup(std::string_view kind, std::string_view api_version) const {
    const auto group = api_group(api_version);
    for (const auto& d : descriptors_) {
      if (d.kind != kind) continue;
      if (api_group(d.api_version) == group) return &d;
      if (std::find(d.legacy_groups.begin(), d.legacy_groups.end(), group) != d.legacy_groups.end())
        return &d;
    }
    return nullptr;
  }

  /// Any descriptor for `kind`, regardless of group.
  const KindDescriptor* lookup_kind(std::string_view kind) const {
    for (const auto& d : descriptors_)
      if (d.kind == kind) return &d;
    return nullptr;
  }

  const std::vector<KindDescriptor>& descriptors() const noexcept { return descriptors_; }
  std::size_t size() const noexcept { return descriptors_.size(); }

 private:
  std::vector<KindDescriptor> descriptors_;
};

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline constexpr std::string_view kUnknownIcon = "unknown.png";

namespace detail {

struct KindRow {
  const char* kind;
  const char* api_version;
  Scope scope;
  const char* alias;
  const char* pod_template = nullptr;
};

// Scopes follow the Kubernetes API reference.
inline constexpr KindRow kKindTable[] = {
    // Workloads
    {"Pod", "v1", Scope::Namespaced, "pod"},
    {"Deployment", "apps/v1", Scope::Namespaced, "deploy", "spec.template"},
    {"StatefulSet", "apps/v1", Scope::Namespaced, "sts", "spec.template"},
    {"DaemonSet", "apps/v1", Scope::Namespaced, "ds", "spec.template"},
    {"ReplicaSet", "apps/v1", Scope::Namespaced, "rs", "spec.template"},
    {"ControllerRevision", "apps/v1", Scope::Namespaced, "controllerrevision"},
    {"Job", "batch/v1", Scope::Namespaced, "job", "spec.template"},
    {"CronJob", "batch/v1", Scope::Namespaced, "cronjob", "spec.jobTemplate.spec.template"},
    {"ReplicationController", "v1", Scope::Namespaced, "rc", "spec.template"},
    {"PodTemplate", "v1", Scope::Namespaced, "podtemplate", "template"},
    // Configuration
    {"ConfigMap", "v1", Scope::Namespaced, "cm"},
    {"Secret", "v1", Scope::Namespaced, "secret"},
    // Scaling
    {"HorizontalPodAutoscaler", "autoscaling/v2", Scope::Namespaced, "hpa"},
    {"VerticalPodAutoscaler", "autoscaling.k8s.io/v1", Scope::Namespaced, "vpa"},
    // Policies
    {"LimitRange", "v1", Scope::Namespaced, "limits"},
    {"PodDisruptionBudget", "policy/v1", Scope::Namespaced, "pdb"},
    {"PodSecurityPolicy", "policy/v1beta1", Scope::Cluster, "psp"},
    {"ResourceQuota", "v1", Scope::Namespaced, "quota"},
    // Network
    {"Service", "v1", Scope::Namespaced, "svc"},
    {"Endpoints", "v1", Scope::Namespaced, "ep"},
    {"EndpointSlice", "discovery.k8s.io/v1", Scope::Namespaced, "eps"},
    {"Ingress", "networking.k8s.io/v1", Scope::Namespaced, "ing"},
    {"IngressClass", "networking.k8s.io/v1", Scope::Cluster, "ingclass"},
    {"NetworkPolicy", "networking.k8s.io/v1", Scope::Namespaced, "netpol"},
    {"NetworkAttachmentDefinition", "k8s.cni.cncf.io/v1", Scope::Namespaced, "net-attach-def"},
    // Storage
    {"PersistentVolume", "v1", Scope::Cluster, "pv"},
    {"PersistentVolumeClaim", "v1", Scope::Namespaced, "pvc"},
    {"StorageClass", "storage.k8s.io/v1", Scope::Cluster, "sc"},
    {"VolumeAttachment", "storage.k8s.io/v1", Scope::Cluster, "volumeattachment"},
    {"CSINode", "storage.k8s.io/v1", Scope::Cluster, "csinode"},
    {"CSIDriver", "storage.k8s.io/v1", Scope::Cluster, "csidriver"},
    {"CSIStorageCapacity", "storage.k8s.io/v1", Scope::Namespaced, "csisc"},
    // RBAC
    {"ServiceAccount", "v1", Scope::Namespaced, "sa"},
    {"Role", "rbac.authorization.k8s.io/v1", Scope::Namespaced, "role"},
    {"RoleBinding", "rbac.authorization.k8s.io/v1", Scope::Namespaced, "rb"},
    {"ClusterRole", "rbac.authorization.k8s.io/v1", Scope::Cluster, "c.role"},
    {"ClusterRoleBinding", "rbac.authorization.k8s.io/v1", Scope::Cluster, "crb"},
    {"User", "rbac.authorization.k8s.io/v1", Scope::Cluster, "user"},
    {"Group", "rbac.authorization.k8s.io/v1", Scope::Cluster, "group"},
    // Control plane
    {"Namespace", "v1", Scope::Cluster, "ns"},
    {"Node", "v1", Scope::Cluster, "node"},
    {"PriorityClass", "scheduling.k8s.io/v1", Scope::Cluster, "pc"},
    {"RuntimeClass", "node.k8s.io/v1", Scope::Cluster, "runtimeclass"},
    {"APIService", "apiregistration.k8s.io/v1", Scope::Cluster, "apiservice"},
    // Custom-resource machinery
    {"CustomResourceDefinition", "apiextensions.k8s.io/v1", Scope::Cluster, "crd"},
    {"ValidatingWebhookConfiguration", "admissionregistration.k8s.io/v1", Scope::Cluster, "vwc"},
    {"MutatingWebhookConfiguration", "admissionregistration.k8s.io/v1", Scope::Cluster, "mwc"},
};

}  // namespace detail

/// Descriptors for the standard kinds. Icons are "<lowercase kind>.png" in
/// the icon directory; edge rules come from the embedded default config.
inline const KindRegistry& builtin_registry() {
  static const KindRegistry registry = [] {
    std::vector<KindDescriptor> out;
    for (const auto& row : detail::kKindTable) {
      KindDescriptor d;
      d.kind = row.kind;
      d.api_version = row.api_version;
      const auto group = api_group(d.api_version);
      d.kind_key = group.empty() ? d.kind : make_kind_key(d.kind, d.api_version);
      d.scope = row.scope;
      d.alias = row.alias;
      d.icon_ref = to_lower(d.kind) + ".png";
      if (row.pod_template) d.pod_template_path = row.pod_template;
      if (group == "apps" || d.kind == "Ingress" || d.kind == "NetworkPolicy")
        d.legacy_groups = {"extensions"};
      if (const auto* m = find_mapping(builtin_config(), d.kind, d.api_version))
        d.builtin_edge_rules = m->edges;
      out.push_back(std::move(d));
    }
    return KindRegistry(std::move(out));
  }();
  return registry;
}

inline KindDescriptor fallback_descriptor(std::string_view kind, std::string_view api_version) {
  KindDescriptor d;
  d.kind = kind;
  d.api_version = api_version;
  d.kind_key = make_kind_key(kind, api_version);
  d.scope = Scope::Namespaced;
  d.alias = to_lower(kind);
  d.icon_ref = kUnknownIcon;
  d.fallback = true;
  return d;
}

/// Resolves the descriptor for a kind: config node mapping first, then the
/// registry, then a generic namespaced fallback (with a warning).
inline KindDescriptor classify_kind(std::string_view kind, std::string_view api_version,
                                    const KindRegistry& registry, const VisualConfig& config,
                                    Diagnostics* diag = nullptr) {
  const auto* known = registry.lookup(kind, api_version);
  if (const auto* mapping = find_mapping(config, kind, api_version)) {
    KindDescriptor d = known ? *known : fallback_descriptor(kind, api_version);
    d.fallback = false;
    if (mapping->scope) d.scope = *mapping->scope;
    if (mapping->custom_icon) d.icon_ref = *mapping->custom_icon;
    d.builtin_edge_rules = mapping->edges;
    return d;
  }
  if (known) return *known;
  if (diag)
    diag->warn("unknown kind " + make_kind_key(kind, api_version) + ", drawn with a generic icon");
  return fallback_descriptor(kind, api_version);
}

namespace detail {

inline std::string identity_scalar(const YAML::Node& map, const char* key) {
  if (!map || !map.IsMap()) return {};
  const auto node = map[key];
  if (!node || !node.IsScalar()) return {};
  return node.Scalar();
}

}  // namespace detail

/// Builds a Resource from one parsed manifest. Namespaced kinds without a
/// namespace land in "default"; cluster-scoped kinds never carry one.
inline Resource parse_resource(const YAML::Node& doc, const KindRegistry& registry,
                               const VisualConfig& config, Diagnostics* diag = nullptr,
                               const SourceSpec& origin = {}) {
  if (!doc.IsMap()) throw MissingIdentity(describe(origin) + ": document is not a mapping");
  const auto kind = detail::identity_scalar(doc, "kind");
  const auto api_version = detail::identity_scalar(doc, "apiVersion");
  const YAML::Node metadata = doc["metadata"] ? doc["metadata"] : YAML::Node();
  const auto name = detail::identity_scalar(metadata, "name");
  if (kind.empty() || api_version.empty() || name.empty()) {
    std::string missing;
    for (auto [field, value] : {std::pair{"kind", &kind}, {"apiVersion", &api_version},
                                {"metadata.name", &name}})
      if (value->empty()) missing += (missing.empty() ? "" : ", ") + std::string(field);
    throw MissingIdentity(describe(origin) + ": resource lacks " + missing +
                          (kind.empty() ? "" : " (kind " + kind + ")"));
  }

  const auto descriptor = classify_kind(kind, api_version, registry, config, diag);
  Resource r;
  r.id.api_version = api_version;
  r.id.kind = kind;
  r.id.name = name;
  if (descriptor.scope == Scope::Namespaced) {
    auto ns = detail::identity_scalar(metadata, "namespace");
    r.id.ns = ns.empty() ? std::string(kDefaultNamespace) : ns;
  }

  if (metadata.IsMap()) {
    if (const auto labels = metadata["labels"]; labels && labels.IsMap()) {
      for (const auto& kv : labels)
        if (kv.second.IsScalar()) r.labels[kv.first.as<std::string>()] = kv.second.Scalar();
    }
    if (const auto owners = metadata["ownerReferences"]; owners && owners.IsSequence()) {
      for (const auto& o : owners) {
        OwnerRef ref{detail::identity_scalar(o, "kind"), detail::identity_scalar(o, "apiVersion"),
                     detail::identity_scalar(o, "name"), std::nullopt};
        if (ref.kind.empty() || ref.name.empty()) {
          if (diag) diag->warn(to_string(r.id) + ": incomplete ownerReference ignored");
          continue;
        }
        if (auto uid = detail::identity_scalar(o, "uid"); !uid.empty()) ref.uid = uid;
        r.owner_refs.push_back(std::move(ref));
      }
    }
  }
  r.body = YAML::Clone(doc);
  r.origin = origin;
  return r;
}

/// Drops later resources that repeat an earlier identity, warning once each.
inline std::vector<Resource> deduplicate(std::vector<Resource> resources, Diagnostics* diag = nullptr) {
  // Among resources sharing an id the survivor is the one with the smallest
  // serialized body, so the result does not depend on document order.
  const auto canonical = [](const Resource& r) {
    YAML::Emitter em;
    em << r.body;
    return std::string(em.c_str());
  };
  std::vector<Resource> out;
  out.reserve(resources.size());
  std::map<ResourceId, std::pair<std::size_t, std::string>> seen;  // id -> (slot in out, canonical body)
  for (auto& r : resources) {
    auto body = canonical(r);
    auto it = seen.find(r.id);
    if (it == seen.end()) {
      seen.emplace(r.id, std::make_pair(out.size(), std::move(body)));
      out.push_back(std::move(r));
      continue;
    }
    auto& [slot, kept] = it->second;
    if (diag)
      diag->warn("duplicate resource " + to_string(r.id) + " collapsed into one node" +
                 (body == kept ? "" : " (definitions differ)"));
    if (body < kept) {
      kept = std::move(body);
      out[slot] = std::move(r);
    }
  }
  return out;
}

}  // namespace k8s_atlas

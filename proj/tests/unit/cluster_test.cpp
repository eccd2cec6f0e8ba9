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


#include <functional>
#include <map>
#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace k8s_atlas {
namespace {

using testing::rid;

struct Built {
  ResourceGraph graph;
  ClusterTree tree;
};

Built cluster_fixture(const std::vector<std::string>& files, const VisualConfig& user, bool frame) {
  const auto config = merge(builtin_config(), user);
  Built b;
  b.graph = build_graph(testing::load_fixture(files, config), config, builtin_registry());
  b.tree = assign_clusters(b.graph, config, frame);
  return b;
}

Built cluster_text(const std::string& yaml, const VisualConfig& user = {}, bool frame = false) {
  const auto config = merge(builtin_config(), user);
  Built b;
  b.graph = build_graph(testing::parse_text(yaml, config), config, builtin_registry());
  b.tree = assign_clusters(b.graph, config, frame);
  return b;
}

// Every member with the chain of (level, title) from the root down to it.
using Chain = std::vector<std::pair<ClusterLevel, std::string>>;
std::map<ResourceId, Chain> chains(const ClusterTree& tree) {
  std::map<ResourceId, Chain> out;
  std::function<void(const ClusterNode&, Chain)> walk = [&](const ClusterNode& n, Chain chain) {
    chain.emplace_back(n.level, n.title);
    for (const auto& m : n.members) EXPECT_TRUE(out.emplace(m, chain).second) << to_string(m);
    for (const auto& c : n.children) walk(c, chain);
  };
  for (const auto& m : tree.members) EXPECT_TRUE(out.emplace(m, Chain{}).second) << to_string(m);
  for (const auto& c : tree.children) walk(c, {});
  return out;
}

TEST(RenderTitleTest, Examples) {
  EXPECT_EQ(render_title(ClusterRule{"app", "Application: {}", {}}, "wordpress"), "Application: wordpress");
  EXPECT_EQ(render_title(ClusterRule{"x", "{}", {}}, "x"), "x");
  EXPECT_EQ(render_title(ClusterRule{"c", "Chart {} v1", {}}, "cert-manager"), "Chart cert-manager v1");
  EXPECT_EQ(render_title(ClusterRule{"c", "{}", {}}, "{}"), "{}") << "value is inserted once, not re-expanded";
}

TEST(AssignClustersTest, WordpressWithSnippet) {
  const auto b = cluster_fixture(testing::wordpress_files(),
                                 load_config_file(testing::fixture("wordpress-config.yaml")), false);
  EXPECT_TRUE(b.tree.members.empty());
  ASSERT_EQ(b.tree.children.size(), 1u);
  const auto& ns = b.tree.children[0];
  EXPECT_EQ(ns.level, ClusterLevel::Namespace);
  EXPECT_EQ(ns.title, "default");
  EXPECT_EQ(ns.style.border, Border::Dashed);
  EXPECT_FALSE(ns.style.bgcolor);
  EXPECT_TRUE(ns.members.empty());
  ASSERT_EQ(ns.children.size(), 1u);
  const auto& app = ns.children[0];
  EXPECT_EQ(app.level, ClusterLevel::Custom);
  EXPECT_EQ(app.title, "Application: wordpress");
  EXPECT_EQ(app.style.bgcolor, "#ECE8F6");
  EXPECT_TRUE(app.children.empty());
  EXPECT_EQ(app.members.size(), 7u);
  EXPECT_EQ(cluster_depth(b.tree), 2u);
}

TEST(AssignClustersTest, DeployedWordpressFrameAndClusterScopedOutsideNamespace) {
  const auto b = cluster_fixture({"wordpress-deployed.yaml"}, {}, true);
  ASSERT_EQ(b.tree.children.size(), 1u);
  EXPECT_TRUE(b.tree.members.empty());
  const auto& frame = b.tree.children[0];
  EXPECT_EQ(frame.level, ClusterLevel::K8sCluster);
  EXPECT_EQ(frame.style.bgcolor, std::string(kClusterFrameColor));
  const auto c = chains(b.tree);
  for (const auto& [id, chain] : c) {
    ASSERT_FALSE(chain.empty());
    EXPECT_EQ(chain[0].first, ClusterLevel::K8sCluster);
    const bool in_ns = chain.size() > 1 && chain[1].first == ClusterLevel::Namespace;
    EXPECT_EQ(in_ns, id.ns.has_value()) << to_string(id);
  }
  EXPECT_EQ(c.at(rid("storage.k8s.io/v1", "StorageClass", std::nullopt, "standard")).size(), 1u);
  EXPECT_EQ(c.at(rid("v1", "PersistentVolume", std::nullopt, "pvc-9d6b1c0e-3333-4f2a-8b7c-000000000001")).size(), 1u);
}

TEST(AssignClustersTest, NoFrameWithoutFlag) {
  const auto b = cluster_fixture({"wordpress-deployed.yaml"}, {}, false);
  for (const auto& c : b.tree.children) EXPECT_NE(c.level, ClusterLevel::K8sCluster);
  EXPECT_EQ(b.tree.members.size(), 3u) << "2 PVs and the StorageClass sit at the root";
}

TEST(AssignClustersTest, SixLevelFixtureHasDepthSix) {
  const auto b = cluster_fixture({"six-levels.yaml"}, {}, true);
  EXPECT_EQ(cluster_depth(b.tree), 6u);
  const auto c = chains(b.tree);
  const auto& deploy = c.at(rid("apps/v1", "Deployment", "shop", "cart-api"));
  EXPECT_EQ(deploy, (Chain{{ClusterLevel::K8sCluster, "Kubernetes cluster"},
                           {ClusterLevel::Namespace, "shop"},
                           {ClusterLevel::Instance, "K8s instance: shop-prod"},
                           {ClusterLevel::HelmChart, "Helm chart: shop-1.4.2"},
                           {ClusterLevel::Application, "K8s application: cart"},
                           {ClusterLevel::Component, "K8s component: api"}}));
}

TEST(AssignClustersTest, LabelPrecedence) {
  const auto b = cluster_text(R"(
apiVersion: v1
kind: ConfigMap
metadata:
  name: both
  labels: {app.kubernetes.io/name: formal, app: casual, app.kubernetes.io/component: db, tier: backend}
---
apiVersion: v1
kind: ConfigMap
metadata:
  name: legacy
  labels: {app: casual, tier: backend}
)");
  const auto c = chains(b.tree);
  EXPECT_EQ(c.at(rid("v1", "ConfigMap", "default", "both")),
            (Chain{{ClusterLevel::Namespace, "default"},
                   {ClusterLevel::Application, "K8s application: formal"},
                   {ClusterLevel::Component, "K8s component: db"}}));
  EXPECT_EQ(c.at(rid("v1", "ConfigMap", "default", "legacy")),
            (Chain{{ClusterLevel::Namespace, "default"},
                   {ClusterLevel::Application, "K8s application: casual"},
                   {ClusterLevel::Component, "K8s component: backend"}}));
}

TEST(AssignClustersTest, UnlabelledResourcesAreDirectNamespaceMembers) {
  const auto b = cluster_text("apiVersion: v1\nkind: ConfigMap\nmetadata: {name: plain, namespace: x}\n");
  ASSERT_EQ(b.tree.children.size(), 1u);
  EXPECT_EQ(b.tree.children[0].members, (std::vector<ResourceId>{rid("v1", "ConfigMap", "x", "plain")}));
  EXPECT_TRUE(b.tree.children[0].children.empty());
}

TEST(AssignClustersTest, ClusterScopedResourcesKeepLogicalLevels) {
  const auto b = cluster_fixture({"six-levels.yaml"}, {}, false);
  const auto c = chains(b.tree);
  const auto& role = c.at(rid("rbac.authorization.k8s.io/v1", "ClusterRole", std::nullopt, "shop-reader"));
  EXPECT_EQ(role, (Chain{{ClusterLevel::Instance, "K8s instance: shop-prod"},
                         {ClusterLevel::Application, "K8s application: cart"}}));
}

TEST(AssignClustersTest, CustomLevelsAppendInConfigOrder) {
  const auto user = parse_config("clusters:\n  - {label: team, title: 'Team {}', bgcolor: '#112233'}\n"
                                 "  - {label: squad, title: 'Squad {}'}\n");
  const auto b = cluster_text(R"(
apiVersion: v1
kind: ConfigMap
metadata: {name: c, labels: {squad: blue, team: core, tier: cache}}
)",
                              user);
  const auto c = chains(b.tree);
  EXPECT_EQ(c.at(rid("v1", "ConfigMap", "default", "c")),
            (Chain{{ClusterLevel::Namespace, "default"},
                   {ClusterLevel::Component, "K8s component: cache"},
                   {ClusterLevel::Custom, "Team core"},
                   {ClusterLevel::Custom, "Squad blue"}}));
}

TEST(AssignClustersTest, PartitionAndNoEmptyClusters) {
  const auto b = cluster_fixture({"wordpress-deployed.yaml", "six-levels.yaml"}, {}, true);
  const auto c = chains(b.tree);
  EXPECT_EQ(c.size(), b.graph.nodes.size());
  for (const auto& [id, node] : b.graph.nodes) EXPECT_TRUE(c.count(id)) << to_string(id);
  std::function<void(const ClusterNode&)> check = [&](const ClusterNode& n) {
    EXPECT_FALSE(n.members.empty() && n.children.empty()) << n.title;
    for (const auto& ch : n.children) check(ch);
  };
  for (const auto& ch : b.tree.children) check(ch);
}

TEST(AssignClustersTest, IdenticalGroupingLabelsShareDeepestCluster) {
  const auto b = cluster_text(R"(
apiVersion: v1
kind: ConfigMap
metadata: {name: a, labels: {app: shop, tier: web, unrelated: one}}
---
apiVersion: v1
kind: Secret
metadata: {name: b, labels: {app: shop, tier: web, unrelated: two}}
)");
  const auto c = chains(b.tree);
  EXPECT_EQ(c.at(rid("v1", "ConfigMap", "default", "a")), c.at(rid("v1", "Secret", "default", "b")));
}

TEST(ClusterDepthTest, EmptyTreeIsZero) {
  EXPECT_EQ(cluster_depth(ClusterTree{}), 0u);
  EXPECT_EQ(cluster_depth(assign_clusters(ResourceGraph{}, builtin_config(), true)), 0u);
}

}  // namespace
}  // namespace k8s_atlas

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

// Builds a diagram from in-memory manifests and prints the graph summary
// followed by the DOT text. No external tools are needed for this path.

#include <iostream>
#include <string>

#include "k8s_atlas/k8s_atlas.hpp"

namespace {

constexpr const char* kManifests = R"(
apiVersion: apps/v1
kind: Deployment
metadata:
  name: web
  namespace: shop
  labels: {app: web}
spec:
  selector: {matchLabels: {app: web}}
  template:
    metadata: {labels: {app: web}}
    spec:
      containers:
        - name: web
          image: nginx
          envFrom: [{configMapRef: {name: web-settings}}]
---
apiVersion: v1
kind: Service
metadata: {name: web, namespace: shop, labels: {app: web}}
spec:
  selector: {app: web}
---
apiVersion: v1
kind: ConfigMap
metadata: {name: web-settings, namespace: shop, labels: {app: web}}
)";

}  // namespace

int main() {
  using namespace k8s_atlas;
  Diagnostics diag;
  const VisualConfig& config = builtin_config();
  auto docs = split_documents(kManifests, SourceSpec::stdin_source());
  auto resources = load_resources(docs, builtin_registry(), config, &diag);
  auto result = diagram_resources(std::move(resources), config, /*cluster_frame=*/false,
                                  locate_icon_dir(), &diag);

  std::cerr << result.graph.nodes.size() << " nodes, " << result.graph.edges.size() << " edges\n";
  for (const auto& e : result.graph.edges)
    std::cerr << "  " << to_string(e.source) << " -" << to_string(e.kind) << "-> " << to_string(e.target)
              << '\n';
  diag.flush(std::cerr, "warning: ");
  std::cout << result.dot.text;
  return 0;
}

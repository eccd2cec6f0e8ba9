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

// A YAML::Node with value-type assignment. yaml-cpp's Node::operator=
// writes through to the node it references, so a plain Node member turns
// the swaps done by std::sort / std::shuffle into silent data corruption.
// NodeRef rebinds on assignment instead; everything else is YAML::Node.

#pragma once

#include <yaml-cpp/yaml.h>

namespace k8s_atlas {

class NodeRef : public YAML::Node {
 public:
  NodeRef() = default;
  NodeRef(const YAML::Node& node) : YAML::Node(node) {}  // NOLINT(google-explicit-constructor)
  NodeRef(const NodeRef&) = default;

  NodeRef& operator=(const NodeRef& other) {
    reset(other);
    return *this;
  }
  NodeRef& operator=(const YAML::Node& other) {
    reset(other);
    return *this;
  }
};

}  // namespace k8s_atlas

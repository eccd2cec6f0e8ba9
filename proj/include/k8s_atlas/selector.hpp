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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

namespace k8s_atlas {

enum class SelectorOperator { In, NotIn, Exists, DoesNotExist };

struct SelectorRequirement {
  std::string key;
  SelectorOperator op = SelectorOperator::Exists;
  std::vector<std::string> values;

  friend bool operator==(const SelectorRequirement&, const SelectorRequirement&) = default;
};

struct LabelSelector {
  std::map<std::string, std::string> match_labels;
  std::vector<SelectorRequirement> match_expressions;

  bool empty() const noexcept { return match_labels.empty() && match_expressions.empty(); }

  /// In/NotIn need values; Exists/DoesNotExist must have none.
  bool valid() const {
    return std::all_of(match_expressions.begin(), match_expressions.end(),
                       [](const SelectorRequirement& r) {
                         const bool set_op = r.op == SelectorOperator::In ||
                                             r.op == SelectorOperator::NotIn;
                         return set_op != r.values.empty();
                       });
  }

  friend bool operator==(const LabelSelector&, const LabelSelector&) = default;
};

/// Evaluates a selector. An empty selector matches nothing: a diagram edge
/// to every pod in the namespace carries no information.
inline bool matches_selector(const LabelSelector& selector,
                             const std::map<std::string, std::string>& labels) {
  if (selector.empty()) return false;
  for (const auto& [key, value] : selector.match_labels) {
    auto it = labels.find(key);
    if (it == labels.end() || it->second != value) return false;
  }
  for (const auto& req : selector.match_expressions) {
    auto it = labels.find(req.key);
    const bool present = it != labels.end();
    const auto in_values = [&] {
      return present &&
             std::find(req.values.begin(), req.values.end(), it->second) != req.values.end();
    };
    switch (req.op) {
      case SelectorOperator::In:
        if (!in_values()) return false;
        break;
      case SelectorOperator::NotIn:
        if (in_values()) return false;
        break;
      case SelectorOperator::Exists:
        if (!present) return false;
        break;
      case SelectorOperator::DoesNotExist:
        if (present) return false;
        break;
    }
  }
  return true;
}

inline std::optional<SelectorOperator> parse_operator(const std::string& text) {
  if (text == "In") return SelectorOperator::In;
  if (text == "NotIn") return SelectorOperator::NotIn;
  if (text == "Exists") return SelectorOperator::Exists;
  if (text == "DoesNotExist") return SelectorOperator::DoesNotExist;
  return std::nullopt;
}

/// Reads a plain label map (Service.spec.selector style).
inline LabelSelector selector_from_map(const YAML::Node& node) {
  LabelSelector s;
  if (!node || !node.IsMap()) return s;
  for (const auto& kv : node)
    if (kv.second.IsScalar()) s.match_labels[kv.first.as<std::string>()] = kv.second.Scalar();
  return s;
}

/// Reads a metav1.LabelSelector ({matchLabels, matchExpressions}). Returns
/// nullopt when an expression is malformed.
inline std::optional<LabelSelector> selector_from_yaml(const YAML::Node& node) {
  LabelSelector s;
  if (!node || !node.IsMap()) return s;
  s.match_labels = selector_from_map(node["matchLabels"]).match_labels;
  if (const auto exprs = node["matchExpressions"]; exprs && exprs.IsSequence()) {
    for (const auto& e : exprs) {
      if (!e.IsMap() || !e["key"] || !e["key"].IsScalar() || !e["operator"] ||
          !e["operator"].IsScalar())
        return std::nullopt;
      auto op = parse_operator(e["operator"].Scalar());
      if (!op) return std::nullopt;
      SelectorRequirement req{e["key"].Scalar(), *op, {}};
      if (const auto values = e["values"]; values && values.IsSequence())
        for (const auto& v : values)
          if (v.IsScalar()) req.values.push_back(v.Scalar());
      s.match_expressions.push_back(std::move(req));
    }
  }
  if (!s.valid()) return std::nullopt;
  return s;
}

}  // namespace k8s_atlas

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
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace k8s_atlas {

/// Collects non-fatal warnings raised by the pipeline stages. Nothing is
/// printed here; the caller decides where (and whether) warnings go.
/// Repeats of an identical message are dropped.
class Diagnostics {
 public:
  void warn(std::string message) {
    if (std::find(warnings_.begin(), warnings_.end(), message) == warnings_.end())
      warnings_.push_back(std::move(message));
  }

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  bool empty() const noexcept { return warnings_.empty(); }

  bool contains(std::string_view needle) const {
    return std::any_of(warnings_.begin(), warnings_.end(), [&](const std::string& w) {
      return w.find(needle) != std::string::npos;
    });
  }

  void flush(std::ostream& os, std::string_view prefix = "warning: ") {
    for (const auto& w : warnings_) os << prefix << w << '\n';
    warnings_.clear();
  }

 private:
  std::vector<std::string> warnings_;
};

}  // namespace k8s_atlas

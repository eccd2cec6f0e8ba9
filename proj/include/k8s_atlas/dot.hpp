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

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

#include "k8s_atlas/cluster.hpp"
#include "k8s_atlas/diagnostics.hpp"
#include "k8s_atlas/graph.hpp"

namespace k8s_atlas {

struct DotDocument {
  std::string text;
};

struct EmitOptions {
  /// Directory holding the built-in icons. Icons inside it are referenced
  /// by bare file name, so the renderer must run with it as working
  /// directory. Empty disables icons.
  std::filesystem::path icon_dir;
  Diagnostics* diag = nullptr;
};

/// Escapes backslashes and double quotes for a quoted DOT string.
inline std::string escape_dot_string(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string quote(std::string_view s) { return "\"" + escape_dot_string(s) + "\""; }

inline std::string escape_html(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string cluster_name(std::string_view key_path) {
  std::ostringstream os;
  os << "cluster_" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key_path);
  return os.str();
}

inline std::string path_segment(const ClusterNode& c) {
  std::string seg(to_string(c.level));
  if (!c.label_key.empty()) seg += "[" + c.label_key + "]";
  return seg + "=" + c.key + "/";
}

class DotWriter {
 public:
  DotWriter(const ResourceGraph& graph, const EmitOptions& options)
      : graph_(graph), options_(options) {
    if (!options_.icon_dir.empty()) {
      std::error_code ec;
      icons_ = std::filesystem::is_regular_file(options_.icon_dir / kUnknownIcon, ec);
      if (!icons_) warn("icon directory " + options_.icon_dir.string() + " unusable; drawing plain nodes");
    }
  }

  std::string run(const ClusterTree& tree) {
    out_ << "digraph \"kubernetes\" {\n";
    if (!graph_.nodes.empty()) {
      out_ << "  graph [fontname=\"Helvetica\", fontsize=12, labeljust=l];\n";
      out_ << "  node [fontname=\"Helvetica\", fontsize=10, shape=none, margin=0];\n";
      out_ << "  edge [fontname=\"Helvetica\", fontsize=9];\n";
    }
    for (const auto& c : tree.children) cluster(c, "", 1);
    for (const auto& id : tree.members) node(id, 1);
    for (const auto& e : graph_.edges) edge(e);
    out_ << "}\n";
    return out_.str();
  }

 private:
  void warn(std::string msg) {
    if (options_.diag) options_.diag->warn(std::move(msg));
  }

  static std::string indent(int depth) { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

  void cluster(const ClusterNode& c, const std::string& parent_path, int depth) {
    const auto path = parent_path + path_segment(c);
    const auto pad = indent(depth);
    out_ << pad << "subgraph " << quote(cluster_name(path)) << " {\n";
    out_ << pad << "  graph [label=" << quote(c.title)
         << ", style=" << (c.style.border == Border::Dashed ? "dashed" : "solid");
    if (c.style.bgcolor) out_ << ", bgcolor=" << quote(*c.style.bgcolor);
    out_ << "];\n";
    for (const auto& child : c.children) cluster(child, path, depth + 1);
    for (const auto& id : c.members) node(id, depth + 1);
    out_ << pad << "}\n";
  }

  /// Icon reference usable in the DOT text, or empty when none is usable.
  std::string icon_for(const KindDescriptor& d) {
    namespace fs = std::filesystem;
    if (!icons_) return {};
    std::error_code ec;
    const fs::path ref(d.icon_ref);
    if (ref.is_absolute()) {
      if (fs::is_regular_file(ref, ec)) return ref.string();
    } else if (!d.icon_ref.empty() && fs::is_regular_file(options_.icon_dir / ref, ec)) {
      return ref.generic_string();
    }
    warn("icon '" + d.icon_ref + "' for " + d.kind + " not found; using generic icon");
    return std::string(kUnknownIcon);
  }

  void node(const ResourceId& id, int depth) {
    const auto& n = graph_.nodes.at(id);
    const auto icon = icon_for(n.descriptor);
    const auto tooltip = n.descriptor.alias + " " + id.name;
    out_ << indent(depth) << quote(node_key(id)) << " [";
    if (icon.empty()) {
      out_ << "shape=box, style=rounded, margin=\"0.1\", label=" << quote(id.name)
           << ", xlabel=" << quote(n.descriptor.alias);
    } else {
      out_ << "label=<<TABLE BORDER=\"0\" CELLBORDER=\"0\" CELLSPACING=\"0\" CELLPADDING=\"1\">"
           << "<TR><TD><IMG SRC=\"" << escape_html(icon) << "\"/></TD></TR>"
           << "<TR><TD>" << escape_html(id.name) << "</TD></TR>";
      // Built-in icons carry the alias in the artwork; others get a sublabel.
      if (icon == kUnknownIcon || std::filesystem::path(icon).is_absolute())
        out_ << "<TR><TD><FONT POINT-SIZE=\"8\">" << escape_html(n.descriptor.alias)
             << "</FONT></TD></TR>";
      out_ << "</TABLE>>";
    }
    out_ << ", tooltip=" << quote(tooltip) << "];\n";
  }

  void edge(const Edge& e) {
    const bool up = e.attrs.direction == Direction::Up;
    const auto& from = up ? e.target : e.source;
    const auto& to = up ? e.source : e.target;
    out_ << "  " << quote(node_key(from)) << " -> " << quote(node_key(to))
         << " [style=" << to_string(e.attrs.style) << ", color=" << quote(e.attrs.color);
    if (e.attrs.xlabel) out_ << ", xlabel=" << quote(*e.attrs.xlabel);
    out_ << "];\n";
  }

  const ResourceGraph& graph_;
  const EmitOptions& options_;
  bool icons_ = false;
  std::ostringstream out_;
};

}  // namespace detail

/// Serializes graph and clusters into a DOT document. Output is a pure
/// function of the inputs: nodes in identity order, edges in (source,
/// target, kind) order, clusters in (level, key) order, and cluster names
/// derived from a hash of their key path.
inline DotDocument emit_dot(const ResourceGraph& graph, const ClusterTree& tree,
                            const EmitOptions& options = {}) {
  return DotDocument{detail::DotWriter(graph, options).run(tree)};
}

}  // namespace k8s_atlas

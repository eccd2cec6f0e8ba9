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

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>

#include "k8s_atlas/dot.hpp"
#include "k8s_atlas/errors.hpp"
#include "k8s_atlas/process.hpp"
#include "k8s_atlas/resource.hpp"

namespace k8s_atlas {

enum class RenderFormat { PNG, JPG, GIF, TIFF, SVG, PDF, DOT };

inline constexpr std::array<RenderFormat, 7> kAllFormats{
    RenderFormat::PNG, RenderFormat::JPG, RenderFormat::GIF, RenderFormat::TIFF,
    RenderFormat::SVG, RenderFormat::PDF, RenderFormat::DOT};

/// Name passed to the engine as -T<name>.
inline std::string_view engine_format(RenderFormat f) {
  switch (f) {
    case RenderFormat::PNG: return "png";
    case RenderFormat::JPG: return "jpg";
    case RenderFormat::GIF: return "gif";
    case RenderFormat::TIFF: return "tiff";
    case RenderFormat::SVG: return "svg";
    case RenderFormat::PDF: return "pdf";
    case RenderFormat::DOT: return "dot";
  }
  return "dot";
}

/// Case-insensitive extension lookup; .jpeg is JPG, .gv and .dot are DOT.
inline RenderFormat infer_format(const std::filesystem::path& output) {
  const auto ext = to_lower(output.extension().string());
  if (ext == ".png") return RenderFormat::PNG;
  if (ext == ".jpg" || ext == ".jpeg") return RenderFormat::JPG;
  if (ext == ".gif") return RenderFormat::GIF;
  if (ext == ".tif" || ext == ".tiff") return RenderFormat::TIFF;
  if (ext == ".svg") return RenderFormat::SVG;
  if (ext == ".pdf") return RenderFormat::PDF;
  if (ext == ".dot" || ext == ".gv") return RenderFormat::DOT;
  throw UnknownFormat("cannot infer output format from '" + output.string() +
                      "'; supported extensions: .png .jpg .jpeg .gif .tif .tiff .svg .pdf .dot .gv");
}

inline constexpr const char* kEngineEnv = "K8S_ATLAS_DOT";

/// Layout engine binary: $K8S_ATLAS_DOT, else `dot`.
inline std::string engine_binary() {
  const char* env = std::getenv(kEngineEnv);
  return env && *env ? std::string(env) : std::string("dot");
}

inline void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'", ErrorClass::Environment);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("error while writing '" + path.string() + "'", ErrorClass::Environment);
}

/// Produces the bytes of `format` for a DOT document. DOT is returned as
/// is; everything else goes through `<engine> -T<format>` with the document
/// on stdin, run from `workdir` so relative icon paths resolve.
inline std::string render_bytes(const DotDocument& doc, RenderFormat format,
                                const std::optional<std::filesystem::path>& workdir = {}) {
  if (format == RenderFormat::DOT) return doc.text;
  const auto engine = engine_binary();
  auto result = run_process(engine, {"-T" + std::string(engine_format(format))}, doc.text, workdir);
  if (result.exit_code != 0) throw RenderFailed(result.exit_code, result.err);
  if (result.out.empty()) throw RenderFailed(0, "engine produced no output");
  return std::move(result.out);
}

inline void render(const DotDocument& doc, RenderFormat format, const std::filesystem::path& output,
                   const std::optional<std::filesystem::path>& workdir = {}) {
  write_file(output, render_bytes(doc, format, workdir));
}

}  // namespace k8s_atlas

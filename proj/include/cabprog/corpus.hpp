// Copyright 2026 The cabprog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Files on disk: reading and writing shape programs in any supported format,
// and corpus manifests (schema "cabprog.manifest/1"):
//
//   {
//     "schema": "cabprog.manifest/1",
//     "format": "python",
//     "samples": [{"id": "000000", "file": "000000.py", "seed": 123}, ...]
//   }
//
// Any further top-level fields (generator settings, catalog version) are
// informational.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>  // nlohmann, vendored

#include "cabprog/catalog.hpp"
#include "cabprog/codec.hpp"
#include "cabprog/common.hpp"
#include "cabprog/model.hpp"
#include "cabprog/program.hpp"

namespace cabprog {

inline constexpr std::string_view kManifestSchema = "cabprog.manifest/1";
inline constexpr std::string_view kManifestFile = "manifest.json";

enum class FileFormat { kPython, kYaml, kCommands };

inline std::string_view to_string(FileFormat f) {
  switch (f) {
    case FileFormat::kPython: return "python";
    case FileFormat::kYaml: return "yaml";
    case FileFormat::kCommands: return "commands";
  }
  return "?";
}

inline std::optional<FileFormat> parse_file_format(std::string_view s) {
  if (s == "python" || s == "py") return FileFormat::kPython;
  if (s == "yaml" || s == "yml") return FileFormat::kYaml;
  if (s == "commands" || s == "cmd") return FileFormat::kCommands;
  return std::nullopt;
}

inline std::string_view file_extension(FileFormat f) {
  switch (f) {
    case FileFormat::kPython: return ".py";
    case FileFormat::kYaml: return ".yaml";
    case FileFormat::kCommands: return ".cmd";
  }
  return "";
}

// Guesses the format from the extension, then from the first meaningful line.
inline FileFormat detect_format(const std::filesystem::path& path,
                                std::string_view text) {
  const std::string ext = path.extension().string();
  if (ext == ".py") return FileFormat::kPython;
  if (ext == ".yaml" || ext == ".yml") return FileFormat::kYaml;
  if (ext == ".cmd") return FileFormat::kCommands;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos || line[b] == '#') continue;
    line.remove_prefix(b);
    if (line.starts_with(kSequenceStart)) return FileFormat::kCommands;
    if (line.starts_with("cabinet:") || line.starts_with("---")) {
      return FileFormat::kYaml;
    }
    return FileFormat::kPython;
  }
  return FileFormat::kPython;
}

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

inline bool write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  return static_cast<bool>(out);
}

inline Result<CabinetModel> parse_model(std::string_view text, FileFormat format,
                                        const PrimitiveCatalog& catalog,
                                        bool strict = false) {
  switch (format) {
    case FileFormat::kPython:
      return parse_python(text, catalog, strict);
    case FileFormat::kYaml:
      return parse_yaml(text, catalog, strict);
    case FileFormat::kCommands: {
      auto seq = parse_commands(text);
      if (!seq) return Result<CabinetModel>::failure(seq.diagnostics());
      return decode(seq.value(), catalog);
    }
  }
  return Result<CabinetModel>::failure({make_error("format", "unknown format")});
}

// Throws std::invalid_argument for an empty model (all formats) or one the
// codec cannot represent.
inline std::string format_model(const CabinetModel& model, FileFormat format,
                                const PrimitiveCatalog& catalog) {
  switch (format) {
    case FileFormat::kPython:
      return emit_python(model, catalog);
    case FileFormat::kYaml:
      return emit_yaml(model, catalog);
    case FileFormat::kCommands: {
      auto seq = encode(model, catalog);
      if (!seq) {
        std::string why;
        for (const auto& d : seq.diagnostics()) {
          if (d.severity != Severity::kError) continue;
          if (!why.empty()) why += "; ";
          why += format_diagnostic(d);
        }
        throw std::invalid_argument("cannot encode model: " + why);
      }
      return to_text(seq.value());
    }
  }
  return {};
}

// Reads a model file; IO failure yields an "io" diagnostic.
inline Result<CabinetModel> load_model(const std::filesystem::path& path,
                                       const PrimitiveCatalog& catalog,
                                       bool strict = false,
                                       std::optional<FileFormat> format = {}) {
  auto text = read_file(path);
  if (!text) {
    return Result<CabinetModel>::failure(
        {make_error("io", "cannot read " + path.string())});
  }
  return parse_model(*text, format.value_or(detect_format(path, *text)), catalog,
                     strict);
}

// ---------------------------------------------------------------------------
// Manifests

struct ManifestEntry {
  std::string id;
  std::filesystem::path file;  // relative to the manifest directory
  std::optional<std::uint64_t> seed;
};

struct Manifest {
  FileFormat format = FileFormat::kPython;
  std::vector<ManifestEntry> samples;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

inline std::string manifest_to_string(const Manifest& m) {
  nlohmann::ordered_json j;
  j["schema"] = std::string(kManifestSchema);
  j["format"] = std::string(to_string(m.format));
  for (const auto& [key, value] : m.extra.items()) j[key] = value;
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const auto& e : m.samples) {
    nlohmann::ordered_json s;
    s["id"] = e.id;
    s["file"] = e.file.generic_string();
    if (e.seed) s["seed"] = *e.seed;
    samples.push_back(std::move(s));
  }
  j["samples"] = std::move(samples);
  return j.dump(2) + "\n";
}

inline Result<Manifest> parse_manifest(std::string_view text) {
  auto fail = [](std::string message) {
    return Result<Manifest>::failure({make_error("manifest", std::move(message))});
  };
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return fail("manifest is not a JSON object");
  if (!j.contains("schema") || j["schema"] != std::string(kManifestSchema)) {
    return fail("manifest schema must be \"" + std::string(kManifestSchema) + "\"");
  }
  Manifest m;
  if (j.contains("format")) {
    auto f = j["format"].is_string()
                 ? parse_file_format(j["format"].get<std::string>())
                 : std::nullopt;
    if (!f) return fail("unknown manifest format");
    m.format = *f;
  }
  if (!j.contains("samples") || !j["samples"].is_array()) {
    return fail("manifest needs a \"samples\" array");
  }
  std::vector<std::string> ids;
  for (const auto& s : j["samples"]) {
    if (!s.is_object() || !s.contains("id") || !s["id"].is_string() ||
        !s.contains("file") || !s["file"].is_string()) {
      return fail("each sample needs string \"id\" and \"file\"");
    }
    ManifestEntry e;
    e.id = s["id"].get<std::string>();
    e.file = s["file"].get<std::string>();
    if (s.contains("seed") && s["seed"].is_number_unsigned()) {
      e.seed = s["seed"].get<std::uint64_t>();
    }
    ids.push_back(e.id);
    m.samples.push_back(std::move(e));
  }
  std::sort(ids.begin(), ids.end());
  if (auto it = std::adjacent_find(ids.begin(), ids.end()); it != ids.end()) {
    return fail("duplicate sample id \"" + *it + "\"");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "schema" && key != "format" && key != "samples") {
      m.extra[key] = value;
    }
  }
  return Result<Manifest>(std::move(m));
}

// Resolved corpus: sample id -> absolute file path.
struct CorpusListing {
  std::filesystem::path root;
  std::vector<ManifestEntry> samples;  // sorted by id
};

// Accepts a manifest file, a directory containing manifest.json, or a plain
// directory (every .py/.yaml/.yml/.cmd file, id = file stem).
inline Result<CorpusListing> list_corpus(const std::filesystem::path& where) {
  namespace fs = std::filesystem;
  std::error_code ec;
  CorpusListing out;
  fs::path manifest_path;
  if (fs::is_regular_file(where, ec)) {
    manifest_path = where;
  } else if (fs::is_directory(where, ec)) {
    if (fs::is_regular_file(where / kManifestFile, ec)) manifest_path = where / kManifestFile;
  } else {
    return Result<CorpusListing>::failure(
        {make_error("io", "no such file or directory: " + where.string())});
  }

  if (!manifest_path.empty()) {
    auto text = read_file(manifest_path);
    if (!text) {
      return Result<CorpusListing>::failure(
          {make_error("io", "cannot read " + manifest_path.string())});
    }
    auto m = parse_manifest(*text);
    if (!m) return Result<CorpusListing>::failure(m.diagnostics());
    out.root = manifest_path.parent_path();
    out.samples = m.value().samples;
  } else {
    out.root = where;
    std::vector<std::string> seen;
    for (const auto& entry : fs::directory_iterator(where, ec)) {
      if (!entry.is_regular_file()) continue;
      const std::string ext = entry.path().extension().string();
      if (ext != ".py" && ext != ".yaml" && ext != ".yml" && ext != ".cmd") continue;
      ManifestEntry e;
      e.id = entry.path().stem().string();
      e.file = entry.path().filename();
      out.samples.push_back(std::move(e));
    }
    if (ec) {
      return Result<CorpusListing>::failure(
          {make_error("io", "cannot list " + where.string())});
    }
    std::sort(out.samples.begin(), out.samples.end(),
              [](const ManifestEntry& a, const ManifestEntry& b) {
                return a.id != b.id ? a.id < b.id : a.file < b.file;
              });
    for (std::size_t i = 1; i < out.samples.size(); ++i) {
      if (out.samples[i].id == out.samples[i - 1].id) {
        return Result<CorpusListing>::failure({make_error(
            "manifest", "two files share the sample id \"" + out.samples[i].id + "\"")});
      }
    }
  }
  std::sort(out.samples.begin(), out.samples.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) { return a.id < b.id; });
  return Result<CorpusListing>(std::move(out));
}

}  // namespace cabprog

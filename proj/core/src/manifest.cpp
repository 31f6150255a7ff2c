// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "impact/errors.hpp"

namespace impact {

using nlohmann::json;

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    ManifestEntry e;
    try {
      e.audio = j.at("audio").get<std::string>();
      e.features = j.at("features").get<std::string>();
      e.split = j.at("split").get<std::string>();
    } catch (const json::exception& ex) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " + ex.what());
    }
    if (e.split != "train" && e.split != "test") {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": split must be train or test");
    }
    if (j.contains("material")) e.material = j["material"].get<std::string>();
    if (j.contains("action")) e.action = j["action"].get<std::string>();
    if (j.contains("reaction")) e.reaction = j["reaction"].get<std::string>();
    if (j.contains("onsets")) e.onsets = j["onsets"].get<std::vector<double>>();
    entries.push_back(std::move(e));
  }
  return entries;
}

void write_manifest(const std::filesystem::path& path,
                    const std::vector<ManifestEntry>& entries) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& e : entries) {
    json j;
    j["audio"] = e.audio;
    j["features"] = e.features;
    j["split"] = e.split;
    if (e.material) j["material"] = *e.material;
    if (e.action) j["action"] = *e.action;
    if (e.reaction) j["reaction"] = *e.reaction;
    if (!e.onsets.empty()) j["onsets"] = e.onsets;
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("write failed for " + path.string());
}

std::filesystem::path resolve_path(const std::filesystem::path& manifest_path,
                                   const std::string& entry_path) {
  const std::filesystem::path p(entry_path);
  if (p.is_absolute()) return p;
  return manifest_path.parent_path() / p;
}

std::vector<ManifestEntry> split_entries(const std::vector<ManifestEntry>& all,
                                         const std::string& split) {
  std::vector<ManifestEntry> out;
  for (const auto& e : all) {
    if (e.split == split) out.push_back(e);
  }
  return out;
}

}  // namespace impact

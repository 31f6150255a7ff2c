// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace impact {

/// One dataset clip: audio/features paths (relative to the manifest file),
/// a train/test split tag, optional annotation labels and onset times.
/// Labels are analysis-only; training never reads them.
struct ManifestEntry {
  std::string audio;
  std::string features;
  std::string split;  // "train" or "test"
  std::optional<std::string> material;
  std::optional<std::string> action;
  std::optional<std::string> reaction;
  std::vector<double> onsets;  // seconds, ascending
};

/// JSON-lines manifest: one object per line, keys `audio`, `features`,
/// `split`, optional `material`, `action`, `reaction`, `onsets`.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path,
                    const std::vector<ManifestEntry>& entries);

/// Entry paths resolve relative to the manifest's directory.
std::filesystem::path resolve_path(const std::filesystem::path& manifest_path,
                                   const std::string& entry_path);

std::vector<ManifestEntry> split_entries(const std::vector<ManifestEntry>& all,
                                         const std::string& split);

}  // namespace impact

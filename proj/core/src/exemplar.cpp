// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/exemplar.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include <fstream>

#include "impact/matrix_io.hpp"
#include "impact/onset.hpp"
#include "impact/parallel.hpp"
#include "impact/wav_io.hpp"

namespace impact {

Eigen::VectorXd window_at(const Cochleagram& c, Eigen::Index start_frame,
                          int window_len) {
  const Eigen::Index channels = c.channels();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(window_len * channels);
  for (int i = 0; i < window_len; ++i) {
    const Eigen::Index src = start_frame + i;
    if (src < 0 || src >= c.frames()) continue;
    v.segment(static_cast<Eigen::Index>(i) * channels, channels) =
        c.env.row(src).transpose();
  }
  return v;
}

ExemplarDatabase build_exemplar_db(const std::vector<ManifestEntry>& train,
                                   const std::filesystem::path& manifest_path,
                                   int window_len, const CochleaParams& params,
                                   int clip_video_frames, double video_fps,
                                   int threads) {
  if (train.empty()) throw ArgumentError("build_exemplar_db: empty training set");
  if (window_len < 1) throw ArgumentError("build_exemplar_db: window_len must be positive");

  ExemplarDatabase db;
  db.window_len = window_len;
  db.channels = params.n_band + 2;
  db.env_rate = params.env_rate;

  struct ClipJob {
    Cochleagram coch;
    Waveform audio;
    std::vector<double> onsets;
    std::optional<std::string> material;
  };
  std::vector<ClipJob> jobs(train.size());
  parallel_for(train.size(), threads, [&](std::size_t i) {
    const auto& e = train[i];
    ClipJob job;
    job.audio = read_waveform(resolve_path(manifest_path, e.audio));
    job.coch = analyze(job.audio, params);
    job.onsets = e.onsets;
    if (job.onsets.empty()) {
      job.onsets = detect_onsets(job.audio).times;
    }
    job.material = e.material;
    jobs[i] = std::move(job);
  });

  const double half_span = 0.5 * clip_video_frames / video_fps;
  for (auto& job : jobs) {
    db.sample_rate = job.audio.sample_rate;
    for (double t : job.onsets) {
      ExemplarEntry entry;
      const auto peak_frame =
          static_cast<Eigen::Index>(std::llround(t * params.env_rate));
      entry.window = window_at(job.coch, peak_frame - 1, window_len);
      entry.material = job.material;

      const auto start = static_cast<std::ptrdiff_t>(
          std::llround((t - half_span) * job.audio.sample_rate));
      const auto len = static_cast<std::ptrdiff_t>(
          std::llround(2.0 * half_span * job.audio.sample_rate));
      entry.clip.sample_rate = job.audio.sample_rate;
      entry.clip.samples.assign(static_cast<std::size_t>(len), 0.0);
      for (std::ptrdiff_t i = 0; i < len; ++i) {
        const std::ptrdiff_t src = start + i;
        if (src >= 0 && src < static_cast<std::ptrdiff_t>(job.audio.samples.size())) {
          entry.clip.samples[static_cast<std::size_t>(i)] =
              job.audio.samples[static_cast<std::size_t>(src)];
        }
      }
      entry.peak_offset = t - static_cast<double>(start) / job.audio.sample_rate;
      db.entries.push_back(std::move(entry));
    }
  }
  if (db.entries.empty()) {
    throw ArgumentError("build_exemplar_db: no onsets in training set");
  }
  return db;
}

ExemplarQueryResult query_exemplar(
    const ExemplarDatabase& db, const Eigen::VectorXd& query,
    const std::optional<std::string>& material_filter) {
  if (db.entries.empty()) throw ArgumentError("query_exemplar: empty database");
  if (query.size() !=
      static_cast<Eigen::Index>(db.window_len) * db.channels) {
    throw ArgumentError("query_exemplar: query length mismatch");
  }
  ExemplarQueryResult best;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < db.entries.size(); ++i) {
    const auto& e = db.entries[i];
    if (material_filter && e.material != *material_filter) continue;
    const double d = (e.window - query).lpNorm<1>();
    if (d < best_distance) {
      best_distance = d;
      best.index = static_cast<int>(i);
    }
  }
  if (best.index < 0) {
    throw ArgumentError("query_exemplar: no candidates after filtering");
  }
  best.distance = best_distance;
  return best;
}

void ExemplarDatabase::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  Eigen::MatrixXd windows(static_cast<Eigen::Index>(entries.size()),
                          static_cast<Eigen::Index>(window_len) * channels);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    windows.row(static_cast<Eigen::Index>(i)) = entries[i].window.transpose();
  }
  write_matrix_file(dir / "windows.ftr", "FTR1", windows, env_rate);

  std::ofstream meta(dir / "db.jsonl", std::ios::trunc);
  if (!meta) throw IoError("cannot write " + (dir / "db.jsonl").string());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "clip_%05zu.wav", i);
    write_waveform(dir / name, entries[i].clip);
    nlohmann::json j;
    j["clip"] = name;
    j["peak_offset"] = entries[i].peak_offset;
    j["window_len"] = window_len;
    j["channels"] = channels;
    if (entries[i].material) j["material"] = *entries[i].material;
    meta << j.dump() << '\n';
  }
}

ExemplarDatabase ExemplarDatabase::load(const std::filesystem::path& dir) {
  const MatrixFileData windows = read_matrix_file(dir / "windows.ftr", "FTR1");
  std::ifstream meta(dir / "db.jsonl");
  if (!meta) throw IoError("cannot open " + (dir / "db.jsonl").string());

  ExemplarDatabase db;
  db.env_rate = windows.rate_hz;
  std::string line;
  Eigen::Index row = 0;
  while (std::getline(meta, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    ExemplarEntry e;
    if (row >= windows.data.rows()) {
      throw FormatError("exemplar db: more metadata lines than windows");
    }
    e.window = windows.data.row(row).transpose();
    e.clip = read_waveform(dir / j.at("clip").get<std::string>());
    e.peak_offset = j.at("peak_offset").get<double>();
    if (j.contains("material")) e.material = j["material"].get<std::string>();
    db.window_len = j.at("window_len").get<int>();
    db.channels = j.at("channels").get<int>();
    db.sample_rate = e.clip.sample_rate;
    db.entries.push_back(std::move(e));
    ++row;
  }
  if (row != windows.data.rows()) {
    throw FormatError("exemplar db: window/metadata count mismatch");
  }
  return db;
}

}  // namespace impact

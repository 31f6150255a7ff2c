// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/matrix_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "impact/errors.hpp"

namespace impact {
namespace {

constexpr std::size_t kHeaderBytes = 4 + 4 + 4 + 8;

void append(std::vector<std::uint8_t>& out, const void* p, std::size_t n) {
  const auto* b = static_cast<const std::uint8_t*>(p);
  out.insert(out.end(), b, b + n);
}

}  // namespace

void write_matrix_file(const std::filesystem::path& path,
                       const std::string& magic, const Eigen::MatrixXd& data,
                       double rate_hz) {
  if (magic.size() != 4) throw ArgumentError("matrix file magic must be 4 bytes");
  const std::uint32_t channels = static_cast<std::uint32_t>(data.cols());
  const std::uint32_t frames = static_cast<std::uint32_t>(data.rows());

  std::vector<std::uint8_t> out;
  out.reserve(kHeaderBytes + 4u * channels * frames);
  append(out, magic.data(), 4);
  append(out, &channels, 4);
  append(out, &frames, 4);
  append(out, &rate_hz, 8);
  for (std::uint32_t t = 0; t < frames; ++t) {
    for (std::uint32_t c = 0; c < channels; ++c) {
      const float v = static_cast<float>(data(t, c));
      append(out, &v, 4);
    }
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("write failed for " + path.string());
}

MatrixFileData read_matrix_file(const std::filesystem::path& path,
                                const std::string& expected_magic) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (bytes.size() < kHeaderBytes) throw FormatError(path.string() + ": truncated header");
  if (std::memcmp(bytes.data(), expected_magic.data(), 4) != 0) {
    throw FormatError(path.string() + ": bad magic");
  }
  std::uint32_t channels = 0;
  std::uint32_t frames = 0;
  double rate = 0.0;
  std::memcpy(&channels, bytes.data() + 4, 4);
  std::memcpy(&frames, bytes.data() + 8, 4);
  std::memcpy(&rate, bytes.data() + 12, 8);

  const std::size_t expected =
      kHeaderBytes + 4ull * channels * frames;
  if (bytes.size() != expected) {
    throw FormatError(path.string() + ": payload length does not match header");
  }

  MatrixFileData m;
  m.rate_hz = rate;
  m.data.resize(frames, channels);
  const std::uint8_t* p = bytes.data() + kHeaderBytes;
  for (std::uint32_t t = 0; t < frames; ++t) {
    for (std::uint32_t c = 0; c < channels; ++c) {
      float v;
      std::memcpy(&v, p, 4);
      p += 4;
      m.data(t, c) = static_cast<double>(v);
    }
  }
  return m;
}

void write_cochleagram(const std::filesystem::path& path, const Cochleagram& c) {
  write_matrix_file(path, "CGM1", c.env, c.env_rate);
}

Cochleagram read_cochleagram(const std::filesystem::path& path) {
  const MatrixFileData m = read_matrix_file(path, "CGM1");
  Cochleagram c;
  c.env = m.data;
  c.env_rate = m.rate_hz;
  return c;
}

void write_features(const std::filesystem::path& path, const FeatureSequence& f) {
  write_matrix_file(path, "FTR1", f.frames, f.frame_rate);
}

FeatureSequence read_features(const std::filesystem::path& path) {
  const MatrixFileData m = read_matrix_file(path, "FTR1");
  FeatureSequence f;
  f.frames = m.data;
  f.frame_rate = m.rate_hz;
  return f;
}

}  // namespace impact

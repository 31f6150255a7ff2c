// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/wav_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace impact {
namespace {

std::vector<std::uint8_t> read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

std::uint32_t u32le(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t u16le(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
  out.push_back((v >> 16) & 0xff);
  out.push_back((v >> 24) & 0xff);
}

void put_u16le(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
}

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

}  // namespace

Waveform read_waveform(const std::filesystem::path& path) {
  const auto bytes = read_all(path);
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw FormatError(path.string() + ": not a RIFF/WAVE file");
  }

  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
  bool have_fmt = false;
  const std::uint8_t* data = nullptr;
  std::uint32_t data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
    const std::uint32_t chunk_len = u32le(bytes.data() + pos + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_len > bytes.size()) {
      throw FormatError(path.string() + ": truncated chunk");
    }
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw FormatError(path.string() + ": short fmt chunk");
      format = u16le(bytes.data() + body);
      channels = u16le(bytes.data() + body + 2);
      sample_rate = u32le(bytes.data() + body + 4);
      bits = u16le(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data = bytes.data() + body;
      data_len = chunk_len;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }
  if (!have_fmt || data == nullptr) {
    throw FormatError(path.string() + ": missing fmt or data chunk");
  }
  if (channels < 1 || channels > 2 || sample_rate == 0) {
    throw UnsupportedError(path.string() + ": only mono/stereo supported");
  }
  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool float32 = format == kFormatFloat && bits == 32;
  if (!pcm16 && !float32) {
    throw UnsupportedError(path.string() + ": only PCM16 and float32 supported");
  }

  const std::size_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::size_t frame_bytes = bytes_per_sample * channels;
  if (data_len % frame_bytes != 0) {
    throw FormatError(path.string() + ": data chunk not a whole number of frames");
  }
  const std::size_t frames = data_len / frame_bytes;

  Waveform w;
  w.sample_rate = static_cast<int>(sample_rate);
  w.samples.resize(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    double acc = 0.0;
    for (std::uint16_t ch = 0; ch < channels; ++ch) {
      const std::uint8_t* p = data + i * frame_bytes + ch * bytes_per_sample;
      if (pcm16) {
        std::int16_t v;
        std::memcpy(&v, p, 2);
        acc += static_cast<double>(v) / 32768.0;
      } else {
        float v;
        std::memcpy(&v, p, 4);
        acc += static_cast<double>(v);
      }
    }
    w.samples[i] = acc / channels;
  }
  return w;
}

void write_waveform(const std::filesystem::path& path, const Waveform& w,
                    WavEncoding encoding) {
  require_finite(w, "write_waveform");
  const bool pcm16 = encoding == WavEncoding::Pcm16;
  const std::uint32_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::uint32_t data_len =
      static_cast<std::uint32_t>(w.samples.size()) * bytes_per_sample;

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_len);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32le(out, 36 + data_len);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  put_u32le(out, 16);
  put_u16le(out, pcm16 ? kFormatPcm : kFormatFloat);
  put_u16le(out, 1);  // mono
  put_u32le(out, static_cast<std::uint32_t>(w.sample_rate));
  put_u32le(out, static_cast<std::uint32_t>(w.sample_rate) * bytes_per_sample);
  put_u16le(out, static_cast<std::uint16_t>(bytes_per_sample));
  put_u16le(out, pcm16 ? 16 : 32);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32le(out, data_len);

  for (double s : w.samples) {
    if (pcm16) {
      double scaled = std::lround(s * 32768.0);
      if (scaled > 32767.0) scaled = 32767.0;
      if (scaled < -32768.0) scaled = -32768.0;
      const std::int16_t v = static_cast<std::int16_t>(scaled);
      std::uint8_t buf[2];
      std::memcpy(buf, &v, 2);
      out.insert(out.end(), buf, buf + 2);
    } else {
      const float v = static_cast<float>(s);
      std::uint8_t buf[4];
      std::memcpy(buf, &v, 4);
      out.insert(out.end(), buf, buf + 4);
    }
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("write failed for " + path.string());
}

}  // namespace impact

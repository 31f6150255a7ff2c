// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "impact/waveform.hpp"

namespace impact {

enum class WavEncoding { Pcm16, Float32 };

// Reads a RIFF/WAVE file. PCM16 and IEEE float32 are accepted; stereo is
// averaged to mono; integer PCM is scaled to [-1, 1).
Waveform read_waveform(const std::filesystem::path& path);

/// Writes mono WAV. Float32 round-trips bit-exactly; Pcm16 within 2^-15.
void write_waveform(const std::filesystem::path& path, const Waveform& w,
                    WavEncoding encoding = WavEncoding::Float32);

}  // namespace impact

// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "impact/cochleagram.hpp"

namespace impact {

// Parametric inversion: impose the cochleagram's (decompressed) subband
// envelopes on seeded white noise, one pass. Per channel the noise is
// band-passed, flattened by its own Hilbert envelope, scaled by the target
// envelope (band-limited upsampling to the audio rate), re-filtered to stay
// inside its band, then channels are summed in index order. Deterministic
// for a fixed seed.
Waveform parametric_invert(const Cochleagram& c, const Filterbank& fb,
                           std::uint64_t seed = 0, int threads = 1);

}  // namespace impact

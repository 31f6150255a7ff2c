// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace impact::fft {

/// Forward real FFT; returns the half spectrum of size n/2+1.
std::vector<std::complex<double>> rfft(std::span<const double> x);

/// Inverse of rfft, normalized: irfft(rfft(x), x.size()) == x.
std::vector<double> irfft(std::span<const std::complex<double>> spectrum,
                          std::size_t n);

// Complex analytic signal whose real part is the (already filtered) signal
// described by `spectrum`: one-sided doubling of the half spectrum followed
// by a normalized inverse complex FFT. |result| is the Hilbert envelope.
std::vector<std::complex<double>> analytic_signal(
    std::span<const std::complex<double>> spectrum, std::size_t n);

// Fourier-domain resampling of a real signal to m samples (band-limited,
// anti-aliased). Linear in the input; output length is exactly m.
std::vector<double> resample(std::span<const double> x, std::size_t m);

}  // namespace impact::fft

// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

#include "impact/errors.hpp"

namespace impact::fft {
namespace {

// FFTW planning is not thread-safe; execution of distinct plans is. Plans are
// created with FFTW_ESTIMATE so no measurement touches the buffers, and all
// buffers come from fftw_malloc so alignment (and thus the chosen codelet) is
// the same on every run.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  void* p = nullptr;
  explicit FftwBuffer(std::size_t bytes) : p(fftw_malloc(bytes)) {}
  ~FftwBuffer() { fftw_free(p); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

}  // namespace

std::vector<std::complex<double>> rfft(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  FftwBuffer in(sizeof(double) * n);
  FftwBuffer out(sizeof(fftw_complex) * (n / 2 + 1));
  std::memcpy(in.p, x.data(), sizeof(double) * n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n),
                                static_cast<double*>(in.p),
                                static_cast<fftw_complex*>(out.p),
                                FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  std::vector<std::complex<double>> spectrum(n / 2 + 1);
  std::memcpy(spectrum.data(), out.p, sizeof(fftw_complex) * (n / 2 + 1));
  return spectrum;
}

std::vector<double> irfft(std::span<const std::complex<double>> spectrum,
                          std::size_t n) {
  if (n == 0) return {};
  if (spectrum.size() != n / 2 + 1) {
    throw ArgumentError("irfft: spectrum size must be n/2+1");
  }
  FftwBuffer in(sizeof(fftw_complex) * (n / 2 + 1));
  FftwBuffer out(sizeof(double) * n);
  std::memcpy(in.p, spectrum.data(), sizeof(fftw_complex) * (n / 2 + 1));
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    // c2r destroys its input; the caller's data was already copied.
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                static_cast<fftw_complex*>(in.p),
                                static_cast<double*>(out.p), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  std::vector<double> x(n);
  const double scale = 1.0 / static_cast<double>(n);
  const double* raw = static_cast<const double*>(out.p);
  for (std::size_t i = 0; i < n; ++i) x[i] = raw[i] * scale;
  return x;
}

std::vector<std::complex<double>> analytic_signal(
    std::span<const std::complex<double>> spectrum, std::size_t n) {
  if (n == 0) return {};
  if (spectrum.size() != n / 2 + 1) {
    throw ArgumentError("analytic_signal: spectrum size must be n/2+1");
  }
  FftwBuffer in(sizeof(fftw_complex) * n);
  FftwBuffer out(sizeof(fftw_complex) * n);
  auto* full = static_cast<std::complex<double>*>(in.p);
  for (std::size_t i = 0; i < n; ++i) full[i] = {0.0, 0.0};
  full[0] = spectrum[0];
  const std::size_t half = n / 2;
  for (std::size_t i = 1; i < half + (n % 2 ? 1 : 0); ++i) {
    full[i] = 2.0 * spectrum[i];
  }
  if (n % 2 == 0) full[half] = spectrum[half];  // Nyquist kept single
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n),
                            static_cast<fftw_complex*>(in.p),
                            static_cast<fftw_complex*>(out.p), FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  std::vector<std::complex<double>> result(n);
  const double scale = 1.0 / static_cast<double>(n);
  const auto* raw = static_cast<const std::complex<double>*>(out.p);
  for (std::size_t i = 0; i < n; ++i) result[i] = raw[i] * scale;
  return result;
}

std::vector<double> resample(std::span<const double> x, std::size_t m) {
  const std::size_t n = x.size();
  if (m == 0 || n == 0) return std::vector<double>(m, 0.0);
  if (m == n) return std::vector<double>(x.begin(), x.end());
  const auto spectrum = rfft(x);
  std::vector<std::complex<double>> target(m / 2 + 1, {0.0, 0.0});
  if (m < n) {
    for (std::size_t i = 0; i < m / 2; ++i) target[i] = spectrum[i];
    // New Nyquist bin collects the +/- pair of the old bin at that frequency.
    if (m % 2 == 0) {
      target[m / 2] = 2.0 * spectrum[m / 2].real();
    } else {
      target[m / 2] = spectrum[m / 2];
    }
  } else {
    for (std::size_t i = 0; i < n / 2; ++i) target[i] = spectrum[i];
    if (n % 2 == 0) {
      // Old Nyquist energy splits across the now-distinct +/- frequencies.
      target[n / 2] = 0.5 * spectrum[n / 2];
    } else {
      target[n / 2] = spectrum[n / 2];
    }
  }
  // irfft divides by m; rescaling by m/n leaves a net 1/n.
  std::vector<double> y = irfft(target, m);
  const double gain = static_cast<double>(m) / static_cast<double>(n);
  for (double& v : y) v *= gain;
  return y;
}

}  // namespace impact::fft

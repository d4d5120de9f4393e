// Copyright 2026 The Phoneval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phoneval/sinc2net.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace phoneval {

namespace {

constexpr double kPi = std::numbers::pi;

double Sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = kPi * x;
  return std::sin(px) / px;
}

void ValidateConfig(const KernelConfig& cfg) {
  if (cfg.length <= 0 || cfg.length % 2 == 0) {
    throw std::invalid_argument("kernel length must be odd and positive, got " +
                                std::to_string(cfg.length));
  }
  if (!(cfg.sample_rate_hz > 0.0)) {
    throw std::invalid_argument("sample rate must be positive");
  }
}

void ValidateParams(const SincFilterParams& p, const KernelConfig& cfg) {
  if (!(p.bandwidth_hz > 0.0)) {
    throw std::invalid_argument("bandwidth must be positive, got " +
                                std::to_string(p.bandwidth_hz));
  }
  const double nyquist = cfg.sample_rate_hz / 2.0;
  if (!(p.center_hz >= 0.0) || p.center_hz > nyquist) {
    throw std::invalid_argument("center frequency " +
                                std::to_string(p.center_hz) +
                                " outside [0, nyquist]");
  }
}

double WindowAt(Window w, int n, int length) {
  switch (w) {
    case Window::kNone:
      return 1.0;
    case Window::kHamming:
      if (length == 1) return 1.0;
      return 0.54 - 0.46 * std::cos(2.0 * kPi * n / (length - 1));
  }
  return 1.0;
}

// In-place iterative radix-2 Cooley-Tukey on a power-of-two sized buffer.
void Fft(std::vector<std::complex<double>>* a) {
  const std::size_t n = a->size();
  auto& x = *a;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = x[i + k];
        const std::complex<double> v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace

std::vector<double> SynthKernel(const SincFilterParams& p,
                                const KernelConfig& cfg) {
  ValidateConfig(cfg);
  ValidateParams(p, cfg);
  const int length = cfg.length;
  const double mid = (length - 1) / 2.0;
  std::vector<double> taps(static_cast<std::size_t>(length));
  for (int n = 0; n < length; ++n) {
    const double t = (n - mid) / cfg.sample_rate_hz;
    const double s = Sinc(p.bandwidth_hz * t);
    const double h = s * s * std::cos(2.0 * kPi * p.center_hz * t);
    taps[static_cast<std::size_t>(n)] = h * WindowAt(cfg.window, n, length);
  }
  return taps;
}

Spectrum FreqResponse(std::span<const double> kernel, int n_fft,
                      double sample_rate_hz) {
  if (kernel.empty()) {
    throw std::invalid_argument("kernel must be non-empty");
  }
  if (!(sample_rate_hz > 0.0)) {
    throw std::invalid_argument("sample rate must be positive");
  }
  if (n_fft <= 0 || (n_fft & (n_fft - 1)) != 0) {
    throw std::invalid_argument("n_fft must be a power of two, got " +
                                std::to_string(n_fft));
  }
  if (static_cast<std::size_t>(n_fft) < 4 * kernel.size()) {
    throw std::invalid_argument("n_fft must be at least 4x the kernel length");
  }
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(n_fft));
  for (std::size_t i = 0; i < kernel.size(); ++i) buf[i] = kernel[i];
  Fft(&buf);
  const std::size_t n_bins = static_cast<std::size_t>(n_fft) / 2 + 1;
  Spectrum out;
  out.freq_hz.resize(n_bins);
  out.magnitude.resize(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) {
    out.freq_hz[k] = static_cast<double>(k) * sample_rate_hz / n_fft;
    out.magnitude[k] = std::abs(buf[k]);
  }
  return out;
}

double TriangleFitError(const Spectrum& spectrum, const SincFilterParams& p,
                        const KernelConfig& cfg) {
  ValidateConfig(cfg);
  ValidateParams(p, cfg);
  if (spectrum.freq_hz.size() != spectrum.magnitude.size() ||
      spectrum.freq_hz.size() < 2) {
    throw std::invalid_argument("malformed spectrum");
  }
  const double nyquist = cfg.sample_rate_hz / 2.0;
  const double lo = std::max(0.0, p.center_hz - p.bandwidth_hz);
  const double hi = std::min(nyquist, p.center_hz + p.bandwidth_hz);

  std::vector<std::size_t> band;
  for (std::size_t k = 0; k < spectrum.freq_hz.size(); ++k) {
    const double f = spectrum.freq_hz[k];
    if (f >= lo && f <= hi) band.push_back(k);
  }
  if (band.size() < 8) {
    throw std::invalid_argument(
        "band [" + std::to_string(lo) + ", " + std::to_string(hi) +
        "] covers only " + std::to_string(band.size()) + " bins");
  }

  double meas_peak = 0.0;
  double tri_peak = 0.0;
  std::vector<double> tri(band.size());
  for (std::size_t i = 0; i < band.size(); ++i) {
    const double f = spectrum.freq_hz[band[i]];
    tri[i] = std::max(0.0, 1.0 - std::abs(f - p.center_hz) / p.bandwidth_hz);
    tri_peak = std::max(tri_peak, tri[i]);
    meas_peak = std::max(meas_peak, spectrum.magnitude[band[i]]);
  }
  if (tri_peak <= 0.0 || meas_peak <= 0.0) {
    throw std::invalid_argument("band has no energy to normalize");
  }

  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < band.size(); ++i) {
    const double m = spectrum.magnitude[band[i]] / meas_peak;
    const double t = tri[i] / tri_peak;
    num += (m - t) * (m - t);
    den += t * t;
  }
  return std::sqrt(num) / std::sqrt(den);
}

KernelGradients GradParams(const SincFilterParams& p, const KernelConfig& cfg) {
  ValidateConfig(cfg);
  ValidateParams(p, cfg);
  const int length = cfg.length;
  const double mid = (length - 1) / 2.0;
  KernelGradients g;
  g.d_bandwidth.resize(static_cast<std::size_t>(length));
  g.d_center.resize(static_cast<std::size_t>(length));
  for (int n = 0; n < length; ++n) {
    const double t = (n - mid) / cfg.sample_rate_hz;
    const double w = WindowAt(cfg.window, n, length);
    if (t == 0.0) {
      // sinc^2(B t) has a flat extremum at t = 0 and cos'(0) = 0, so both
      // partials vanish at the centre tap.
      g.d_bandwidth[static_cast<std::size_t>(n)] = 0.0;
      g.d_center[static_cast<std::size_t>(n)] = 0.0;
      continue;
    }
    const double s = Sinc(p.bandwidth_hz * t);
    const double c = std::cos(2.0 * kPi * p.center_hz * t);
    const double db =
        2.0 * s * (std::cos(kPi * p.bandwidth_hz * t) - s) / p.bandwidth_hz * c;
    const double dc =
        -2.0 * kPi * t * s * s * std::sin(2.0 * kPi * p.center_hz * t);
    g.d_bandwidth[static_cast<std::size_t>(n)] = db * w;
    g.d_center[static_cast<std::size_t>(n)] = dc * w;
  }
  return g;
}

FilterBankSpec InitMel(int n_filters, const KernelConfig& cfg) {
  ValidateConfig(cfg);
  if (n_filters < 2) {
    throw std::invalid_argument("need at least 2 filters, got " +
                                std::to_string(n_filters));
  }
  const double nyquist = cfg.sample_rate_hz / 2.0;
  const double lo_hz = 30.0;
  const double hi_hz = nyquist - 100.0;
  if (!(hi_hz > lo_hz)) {
    throw std::invalid_argument("sample rate too low for mel initialization");
  }
  const double lo_mel = HzToMel(lo_hz);
  const double hi_mel = HzToMel(hi_hz);
  std::vector<double> centers(static_cast<std::size_t>(n_filters));
  for (int i = 0; i < n_filters; ++i) {
    const double mel = lo_mel + (hi_mel - lo_mel) * i / (n_filters - 1);
    centers[static_cast<std::size_t>(i)] = MelToHz(mel);
  }
  FilterBankSpec spec;
  spec.kernel = cfg;
  spec.params.resize(static_cast<std::size_t>(n_filters));
  for (int i = 0; i < n_filters; ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    spec.params[u].center_hz = centers[u];
    if (i + 1 < n_filters) {
      spec.params[u].bandwidth_hz = centers[u + 1] - centers[u];
    } else {
      spec.params[u].bandwidth_hz = spec.params[u - 1].bandwidth_hz;
    }
  }
  return spec;
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

}  // namespace phoneval

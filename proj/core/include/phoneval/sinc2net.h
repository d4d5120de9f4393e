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

#ifndef PHONEVAL_SINC2NET_H_
#define PHONEVAL_SINC2NET_H_

#include <span>
#include <vector>

namespace phoneval {

// Bandwidth and centre frequency of one sinc-squared band-pass filter, in
// Hz. The bandwidth is the half-base of the filter's triangular magnitude
// response: the triangle peaks at center_hz and reaches zero at
// center_hz +- bandwidth_hz.
struct SincFilterParams {
  double bandwidth_hz = 0.0;
  double center_hz = 0.0;
};

enum class Window { kNone, kHamming };

// Sampling grid for kernel synthesis. The length must be odd so t = 0 lands
// on the centre tap, which gives even symmetry and linear phase.
struct KernelConfig {
  int length = 129;
  double sample_rate_hz = 16000.0;
  Window window = Window::kNone;
};

struct FilterBankSpec {
  KernelConfig kernel;
  std::vector<SincFilterParams> params;
};

// Kernel taps h(t_n) = sinc^2(B t_n) * cos(2 pi f_c t_n) on the grid
// t_n = (n - (L-1)/2) / sample_rate, with the normalized sinc convention
// sinc(x) = sin(pi x)/(pi x), sinc(0) = 1. The optional window multiplies
// the taps. Throws std::invalid_argument for an even or non-positive
// length, a non-positive sample rate, B <= 0, or f_c outside [0, nyquist].
std::vector<double> SynthKernel(const SincFilterParams& p,
                                const KernelConfig& cfg);

// One-sided magnitude spectrum: freq_hz[k] = k * fs / n_fft covers
// [0, nyquist] inclusive.
struct Spectrum {
  std::vector<double> freq_hz;
  std::vector<double> magnitude;
};

// Zero-padded DFT magnitude of a kernel. n_fft must be a power of two and
// at least 4x the kernel length; the kernel must be non-empty.
Spectrum FreqResponse(std::span<const double> kernel, int n_fft,
                      double sample_rate_hz);

// Deviation of the measured passband magnitude from the ideal triangle
// implied by (B, f_c): both are peak-normalised over the band
// [f_c - B, f_c + B] clipped to [0, nyquist], and the result is
// ||measured - triangle||_2 / ||triangle||_2 over the band's bins. Longer
// kernels truncate less and fit tighter. Throws std::invalid_argument when
// the clipped band covers fewer than 8 bins.
double TriangleFitError(const Spectrum& spectrum, const SincFilterParams& p,
                        const KernelConfig& cfg);

// Analytical parameter gradients per tap, window included:
//   dh/df_c (t) = -2 pi t sinc^2(B t) sin(2 pi f_c t)
//   dh/dB  (t) = 2 sinc(B t) cos(2 pi f_c t) * (cos(pi B t) - sinc(B t)) / B
// with both zero at t = 0.
struct KernelGradients {
  std::vector<double> d_bandwidth;
  std::vector<double> d_center;
};

KernelGradients GradParams(const SincFilterParams& p, const KernelConfig& cfg);

// Mel-spaced initialization: centre frequencies equally spaced on the mel
// scale over [30 Hz, nyquist - 100 Hz], each bandwidth equal to the spacing
// to the next centre in Hz (the last filter reuses the previous spacing).
// Requires n_filters >= 2.
FilterBankSpec InitMel(int n_filters, const KernelConfig& cfg);

// mel = 2595 log10(1 + hz / 700) and its closed-form inverse.
double HzToMel(double hz);
double MelToHz(double mel);

}  // namespace phoneval

#endif  // PHONEVAL_SINC2NET_H_

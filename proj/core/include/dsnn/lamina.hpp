#pragma once

#include <vector>

#include "dsnn/field.hpp"
#include "dsnn/params.hpp"

namespace dsnn {

// Raw isotropic 2D Gaussian value at integer offset (x, y):
// G(x, y) = exp(-(x^2 + y^2) / (2 sigma^2)) / (2 pi sigma^2).
double gaussian(int x, int y, double sigma);

// Truncated, renormalized Gaussian blur kernel. Taps sum to 1 so constant
// inputs pass through unchanged, which makes the center/surround blurs
// cancel exactly on static input. The 2D taps are the outer product of the
// normalized 1D profile, so separable filtering matches the full stencil.
struct Kernel {
  int radius = 0;               // taps span [-radius, radius] on both axes
  double sigma = 0.0;
  std::vector<double> taps;     // (2r+1)^2, row-major, sums to 1
  std::vector<double> taps_1d;  // 2r+1 separable factor, sums to 1

  double tap(int dx, int dy) const {
    const int n = 2 * radius + 1;
    return taps[static_cast<std::size_t>(dy + radius) * n + (dx + radius)];
  }
};

// Kernel with radius ceil(3 sigma).
Kernel gaussian_kernel(double sigma);

// Zero-padded convolution of `f` with `k`, run as two separable passes.
Field convolve(const Field& f, const Kernel& k);

// Polarity-selective combination of the center and surround blurs:
// both nonnegative -> |pe - pi|, both negative -> -|pe - pi|, mixed signs
// (a contrast reversal inside the receptive field, no defined polarity) -> 0.
double dog_combine(double pe, double pi);

// Center-surround band-pass with polarity selectivity.
// Requires inhibit.sigma > excite.sigma.
Field dog_filter(const Field& p_field, const Kernel& excite, const Kernel& inhibit);

// ON/OFF channel pair. With sigma_l = 0 both planes are nonnegative and
// pointwise disjoint.
struct PolarityPair {
  Field on;
  Field off;
};

// Half-wave rectification into brightening (ON) and darkening (OFF)
// channels, with a small residual fraction of the previous channel value:
//   on  = (la + |la|) / 2 + sigma_l * prev.on
//   off = |la - |la|| / 2 + sigma_l * prev.off
PolarityPair half_wave_split(const Field& la, const PolarityPair& prev, double sigma_l);

// Adaptation state for the fast-onset / slow-decay mechanism, one pair of
// planes per polarity channel.
struct FdsrState {
  Field d_on, d_off;        // delayed (adapted) planes
  Field prev_on, prev_off;  // previous rectifier outputs, for the gradient check
};

// One adaptation update. Per pixel, the time constant is tau_fast while the
// input is not falling (la_prime >= prev_la_prime, first frame counts as
// rising) and tau_slow otherwise; then D <- D + alpha(tau) * (la_prime - D).
Field fdsr_step(const Field& la_prime, const Field& prev_la_prime, const Field& d_prev,
                const Params& p);

// F = la_prime - D. A long-held constant input adapts to ~0; a removed input
// undershoots below zero and recovers slowly. F is passed on unclamped.
Field fdsr_subtract(const Field& la_prime, const Field& d);

}  // namespace dsnn

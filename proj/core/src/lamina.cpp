#include "dsnn/lamina.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dsnn {

double gaussian(int x, int y, double sigma) {
  const double s2 = sigma * sigma;
  return std::exp(-(x * x + y * y) / (2.0 * s2)) / (2.0 * std::numbers::pi * s2);
}

Kernel gaussian_kernel(double sigma) {
  if (sigma <= 0.0) throw std::invalid_argument("gaussian_kernel: sigma must be positive");
  Kernel k;
  k.sigma = sigma;
  k.radius = static_cast<int>(std::ceil(3.0 * sigma));

  const int n = 2 * k.radius + 1;
  std::vector<double> raw(n);
  double sum = 0.0;
  for (int j = -k.radius; j <= k.radius; ++j) {
    raw[j + k.radius] = std::exp(-(j * j) / (2.0 * sigma * sigma));
    sum += raw[j + k.radius];
  }
  k.taps_1d.resize(n);
  for (int j = 0; j < n; ++j) k.taps_1d[j] = raw[j] / sum;

  k.taps.resize(static_cast<std::size_t>(n) * n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) k.taps[static_cast<std::size_t>(y) * n + x] = k.taps_1d[y] * k.taps_1d[x];
  return k;
}

Field convolve(const Field& f, const Kernel& k) {
  const int rows = f.rows();
  const int cols = f.cols();
  const int r = k.radius;
  const double* t = k.taps_1d.data() + r;  // t[0] is the center tap

  // Horizontal pass. Off-axis taps are accumulated as symmetric pairs so a
  // mirrored input yields the exactly mirrored output.
  Field h(rows, cols);
  for (int y = 0; y < rows; ++y) {
    const double* src = f.row(y);
    double* dst = h.row(y);
    for (int x = 0; x < cols; ++x) {
      double acc = t[0] * src[x];
      for (int j = 1; j <= r; ++j) {
        const double left = (x - j >= 0) ? src[x - j] : 0.0;
        const double right = (x + j < cols) ? src[x + j] : 0.0;
        acc += t[j] * (left + right);
      }
      dst[x] = acc;
    }
  }

  // Vertical pass.
  Field out(rows, cols);
  for (int y = 0; y < rows; ++y) {
    double* dst = out.row(y);
    const double* center = h.row(y);
    for (int x = 0; x < cols; ++x) dst[x] = t[0] * center[x];
    for (int j = 1; j <= r; ++j) {
      const double* up = (y - j >= 0) ? h.row(y - j) : nullptr;
      const double* down = (y + j < rows) ? h.row(y + j) : nullptr;
      for (int x = 0; x < cols; ++x) {
        const double a = up ? up[x] : 0.0;
        const double b = down ? down[x] : 0.0;
        dst[x] += t[j] * (a + b);
      }
    }
  }
  return out;
}

double dog_combine(double pe, double pi) {
  if (pe >= 0.0 && pi >= 0.0) return std::abs(pe - pi);
  if (pe < 0.0 && pi < 0.0) return -std::abs(pe - pi);
  return 0.0;
}

Field dog_filter(const Field& p_field, const Kernel& excite, const Kernel& inhibit) {
  if (inhibit.sigma <= excite.sigma)
    throw std::invalid_argument("dog_filter: surround kernel must be broader than center");
  Field pe = convolve(p_field, excite);
  Field pi = convolve(p_field, inhibit);
  Field out(p_field.rows(), p_field.cols());
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i)
    out.values()[i] = dog_combine(pe.values()[i], pi.values()[i]);
  return out;
}

PolarityPair half_wave_split(const Field& la, const PolarityPair& prev, double sigma_l) {
  if (!la.same_shape(prev.on) || !la.same_shape(prev.off))
    throw std::invalid_argument("half_wave_split: size mismatch");
  PolarityPair out{Field(la.rows(), la.cols()), Field(la.rows(), la.cols())};
  const std::size_t n = la.size();
  const double* v = la.values().data();
  const double* pon = prev.on.values().data();
  const double* poff = prev.off.values().data();
  double* on = out.on.values().data();
  double* off = out.off.values().data();
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::abs(v[i]);
    on[i] = (v[i] + a) * 0.5 + sigma_l * pon[i];
    off[i] = std::abs(v[i] - a) * 0.5 + sigma_l * poff[i];
  }
  return out;
}

Field fdsr_step(const Field& la_prime, const Field& prev_la_prime, const Field& d_prev,
                const Params& p) {
  if (!la_prime.same_shape(prev_la_prime) || !la_prime.same_shape(d_prev))
    throw std::invalid_argument("fdsr_step: size mismatch");
  const double dt = p.dt_ms();
  const double a_fast = iir_alpha(p.tau_fast, dt);
  const double a_slow = iir_alpha(p.tau_slow, dt);

  Field out(la_prime.rows(), la_prime.cols());
  const std::size_t n = out.size();
  const double* cur = la_prime.values().data();
  const double* prv = prev_la_prime.values().data();
  const double* dp = d_prev.values().data();
  double* o = out.values().data();
  for (std::size_t i = 0; i < n; ++i) {
    const double alpha = (cur[i] >= prv[i]) ? a_fast : a_slow;
    o[i] = dp[i] + alpha * (cur[i] - dp[i]);
  }
  return out;
}

Field fdsr_subtract(const Field& la_prime, const Field& d) {
  if (!la_prime.same_shape(d)) throw std::invalid_argument("fdsr_subtract: size mismatch");
  Field out(la_prime.rows(), la_prime.cols());
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i)
    out.values()[i] = la_prime.values()[i] - d.values()[i];
  return out;
}

}  // namespace dsnn

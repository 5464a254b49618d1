#include "dsnn/lptc.hpp"

#include <cmath>

namespace dsnn {

const char* to_string(Direction d) {
  switch (d) {
    case Direction::preferred: return "preferred";
    case Direction::null: return "null";
    case Direction::none: return "none";
  }
  return "none";
}

double integrate(const Field& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return sum;
}

double membrane_low_pass(double lp, double prev, const Params& p) {
  return prev + iir_alpha(p.tau_mp, p.dt_ms()) * (lp - prev);
}

double sigmoid_activation(double x, const Params& p) {
  if (x == 0.0) return 0.0;
  const double scale = static_cast<double>(p.cols) * p.rows * p.k_sig;
  double mag = 1.0 / (1.0 + std::exp(-std::abs(x) / scale)) - p.delta_c;
  // Keep the range open at saturation.
  const double cap = 1.0 - p.delta_c - 1e-12;
  if (mag > cap) mag = cap;
  return x > 0.0 ? mag : -mag;
}

double fuse(double on_hat, double off_hat) { return on_hat + off_hat; }

SpikeResult spike_count(double smp, const Params& p) {
  SpikeResult r;
  if (smp >= p.t_sp)
    r.dir = Direction::preferred;
  else if (smp <= -p.t_sp)
    r.dir = Direction::null;
  else
    return r;  // sub-threshold: exponent < 0, floor < 1
  r.count = static_cast<int>(std::floor(std::exp(p.k_sp * (std::abs(smp) - p.t_sp))));
  return r;
}

}  // namespace dsnn

#pragma once

#include <cstdint>

#include "dsnn/field.hpp"
#include "dsnn/params.hpp"

namespace dsnn {

// Motion direction class of a readout system for one frame.
enum class Direction { preferred, null, none };

const char* to_string(Direction d);

// Wide-field integration: sum of the plane over all cells.
double integrate(const Field& f);

// Membrane potential smoothing with the fixed time constant tau_mp.
double membrane_low_pass(double lp, double prev, const Params& p);

// Odd, bounded activation mapping an integrated potential into (-0.5, 0.5):
// f(x) = sgn(x) * ((1 + e^(-|x| / (cols * rows * k_sig)))^-1 - delta_c).
// The output magnitude is capped just below 0.5 so the fused readout stays
// strictly inside (-1, 1) even when the exponential underflows.
double sigmoid_activation(double x, const Params& p);

// ON + OFF fusion of one readout system.
double fuse(double on_hat, double off_hat);

struct SpikeResult {
  int count = 0;
  Direction dir = Direction::none;
};

// Per-frame spike count: floor(e^(k_sp * (|smp| - t_sp))), reported as 0
// below threshold. The direction tag carries the sign the count discards.
SpikeResult spike_count(double smp, const Params& p);

// Raw and smoothed integrated potentials of the four directionally
// specific groups.
struct LptcPotentials {
  double lp_on_hs = 0.0, lp_on_vs = 0.0;
  double lp_off_hs = 0.0, lp_off_vs = 0.0;
  double sm_on_hs = 0.0, sm_on_vs = 0.0;
  double sm_off_hs = 0.0, sm_off_vs = 0.0;
};

// One frame of network output. The smoothed pre-sigmoid potentials are
// included for diagnostics and ablation comparisons.
struct NetworkOutput {
  std::int64_t frame = 0;
  double hs_smp = 0.0, vs_smp = 0.0;  // fused sigmoid membrane potentials
  double lp_on_hs = 0.0, lp_off_hs = 0.0;  // smoothed potentials
  double lp_on_vs = 0.0, lp_off_vs = 0.0;
  int hs_spikes = 0, vs_spikes = 0;
  Direction hs_dir = Direction::none;
  Direction vs_dir = Direction::none;
};

}  // namespace dsnn

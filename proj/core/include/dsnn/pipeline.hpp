#pragma once

#include <cstdint>
#include <vector>

#include "dsnn/directional.hpp"
#include "dsnn/field.hpp"
#include "dsnn/lamina.hpp"
#include "dsnn/lptc.hpp"
#include "dsnn/params.hpp"
#include "dsnn/retina.hpp"

namespace dsnn {

// Input gray levels are mapped to internal signal units before the first
// layer. The factor places typical scene responses in the responsive part
// of the activation curve rather than its saturated tails.
inline constexpr double kInputGain = 1.0 / 48.0;

// The full five-layer network as a stateful per-frame stepper:
// luminance high-pass -> band-pass + ON/OFF split + adaptation ->
// directional correlation -> wide-field readout and spiking.
//
// One instance is single-writer; step() calls must arrive in frame order.
// Distinct instances are independent.
class Pipeline {
 public:
  explicit Pipeline(Params params);

  // Advances every layer exactly one frame and returns the frame's readout.
  // Throws on a size mismatch or a non-increasing frame index.
  NetworkOutput step(const LuminanceFrame& frame);

  // Zeroes all state and the frame counter; parameters are retained.
  void reset();

  void set_ablation(Ablation mode) { params_.ablation = mode; }

  const Params& params() const { return params_; }
  std::int64_t frames_processed() const { return frame_count_; }

 private:
  Params params_;
  Kernel excite_, inhibit_;

  // retina
  Field prev_luminance_;
  bool has_prev_ = false;
  ResidualBuffer residuals_;
  // lamina
  PolarityPair prev_pair_;
  FdsrState fdsr_;
  // medulla / lobula
  DelayBank bank_on_, bank_off_;
  // lobula plate
  double sm_on_hs_ = 0.0, sm_on_vs_ = 0.0;
  double sm_off_hs_ = 0.0, sm_off_vs_ = 0.0;

  std::int64_t frame_count_ = 0;
  std::int64_t last_index_ = -1;
  bool any_frame_seen_ = false;
};

}  // namespace dsnn

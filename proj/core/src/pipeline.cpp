#include "dsnn/pipeline.hpp"

#include <stdexcept>
#include <utility>

namespace dsnn {

Pipeline::Pipeline(Params params)
    : params_(validate(params)),
      excite_(gaussian_kernel(params_.sigma_e)),
      inhibit_(gaussian_kernel(params_.sigma_i)),
      residuals_(params_.n_p) {
  reset();
}

void Pipeline::reset() {
  const int r = params_.rows;
  const int c = params_.cols;
  prev_luminance_ = Field(r, c);
  has_prev_ = false;
  residuals_ = ResidualBuffer(params_.n_p);
  prev_pair_ = PolarityPair{Field(r, c), Field(r, c)};
  fdsr_ = FdsrState{Field(r, c), Field(r, c), Field(r, c), Field(r, c)};
  bank_on_ = make_delay_bank(r, c, params_.n_con);
  bank_off_ = make_delay_bank(r, c, params_.n_con);
  sm_on_hs_ = sm_on_vs_ = sm_off_hs_ = sm_off_vs_ = 0.0;
  frame_count_ = 0;
  last_index_ = -1;
  any_frame_seen_ = false;
}

NetworkOutput Pipeline::step(const LuminanceFrame& frame) {
  if (frame.data.rows() != params_.rows || frame.data.cols() != params_.cols)
    throw std::invalid_argument("pipeline: frame size does not match params");
  if (any_frame_seen_ && frame.index <= last_index_)
    throw std::invalid_argument("pipeline: frame index regression");
  last_index_ = frame.index;
  any_frame_seen_ = true;

  Field luminance(params_.rows, params_.cols);
  for (std::size_t i = 0; i < luminance.size(); ++i)
    luminance.values()[i] = frame.data.values()[i] * kInputGain;

  // Retina: the first frame observes no motion.
  if (!has_prev_) {
    prev_luminance_ = luminance;
    has_prev_ = true;
  }
  Field p = high_pass(luminance, prev_luminance_, residuals_, params_);
  residuals_.push(p);
  prev_luminance_ = std::move(luminance);

  // Lamina: band-pass, polarity split, adaptation.
  Field la = dog_filter(p, excite_, inhibit_);
  PolarityPair pair = half_wave_split(la, prev_pair_, params_.sigma_l);
  if (params_.ablation == Ablation::on_blocked)
    pair.on.fill(0.0);
  else if (params_.ablation == Ablation::off_blocked)
    pair.off.fill(0.0);
  prev_pair_ = pair;

  Field d_on = fdsr_step(pair.on, fdsr_.prev_on, fdsr_.d_on, params_);
  Field d_off = fdsr_step(pair.off, fdsr_.prev_off, fdsr_.d_off, params_);
  Field f_on = fdsr_subtract(pair.on, d_on);
  Field f_off = fdsr_subtract(pair.off, d_off);
  fdsr_.d_on = std::move(d_on);
  fdsr_.d_off = std::move(d_off);
  fdsr_.prev_on = std::move(pair.on);
  fdsr_.prev_off = std::move(pair.off);

  // Medulla / lobula: correlate against the delayed planes from the previous
  // frame, then advance the banks. The delayed arm must lag the direct arm
  // by at least one frame or direction selectivity collapses whenever the
  // shortest delay is comparable to the frame interval.
  CorrelatorOutput corr;
  corr.me_hs = correlate_horizontal(f_on, bank_on_, params_);
  corr.me_vs = correlate_vertical(f_on, bank_on_, params_);
  corr.lo_hs = correlate_horizontal(f_off, bank_off_, params_);
  corr.lo_vs = correlate_vertical(f_off, bank_off_, params_);
  update_delay_bank(f_on, bank_on_, params_);
  update_delay_bank(f_off, bank_off_, params_);

  // Lobula plate: integrate, smooth, activate, fuse, spike.
  sm_on_hs_ = membrane_low_pass(integrate(corr.me_hs), sm_on_hs_, params_);
  sm_on_vs_ = membrane_low_pass(integrate(corr.me_vs), sm_on_vs_, params_);
  sm_off_hs_ = membrane_low_pass(integrate(corr.lo_hs), sm_off_hs_, params_);
  sm_off_vs_ = membrane_low_pass(integrate(corr.lo_vs), sm_off_vs_, params_);

  NetworkOutput out;
  out.frame = frame_count_++;
  out.lp_on_hs = sm_on_hs_;
  out.lp_on_vs = sm_on_vs_;
  out.lp_off_hs = sm_off_hs_;
  out.lp_off_vs = sm_off_vs_;
  out.hs_smp = fuse(sigmoid_activation(sm_on_hs_, params_), sigmoid_activation(sm_off_hs_, params_));
  out.vs_smp = fuse(sigmoid_activation(sm_on_vs_, params_), sigmoid_activation(sm_off_vs_, params_));
  const SpikeResult hs = spike_count(out.hs_smp, params_);
  const SpikeResult vs = spike_count(out.vs_smp, params_);
  out.hs_spikes = hs.count;
  out.hs_dir = hs.dir;
  out.vs_spikes = vs.count;
  out.vs_dir = vs.dir;
  return out;
}

}  // namespace dsnn

#include "dsnn/emd.hpp"

#include <cmath>
#include <stdexcept>

#include "dsnn/params.hpp"

namespace dsnn {

EmdDetector::EmdDetector(int rows, int cols, EmdParams params)
    : params_(params), rows_(rows), cols_(cols) {
  reset();
}

void EmdDetector::reset() {
  low_pass_ = Field(rows_, cols_);
  prev_ = Field(rows_, cols_);
  has_prev_ = false;
}

std::pair<double, double> EmdDetector::step(const LuminanceFrame& frame) {
  if (frame.data.rows() != rows_ || frame.data.cols() != cols_)
    throw std::invalid_argument("emd: frame size mismatch");

  if (has_prev_) {
    const double alpha = iir_alpha(params_.tau_lp, 1000.0 / params_.frame_rate);
    double* lp = low_pass_.values().data();
    const double* pv = prev_.values().data();
    for (std::size_t i = 0; i < low_pass_.size(); ++i) lp[i] += alpha * (pv[i] - lp[i]);
  }
  prev_ = frame.data;
  has_prev_ = true;

  const int d = params_.d;
  double r_hs = 0.0;
  for (int y = 0; y < rows_; ++y) {
    const double* lp = low_pass_.row(y);
    const double* lum = frame.data.row(y);
    for (int x = 0; x + d < cols_; ++x)
      r_hs += lp[x] * lum[x + d] - lp[x + d] * lum[x];
  }
  double r_vs = 0.0;
  for (int y = 0; y + d < rows_; ++y) {
    const double* lp = low_pass_.row(y);
    const double* lp_off = low_pass_.row(y + d);
    const double* lum = frame.data.row(y);
    const double* lum_off = frame.data.row(y + d);
    for (int x = 0; x < cols_; ++x)
      r_vs += lp[x] * lum_off[x] - lp_off[x] * lum[x];
  }

  auto log_readout = [](double r) {
    if (r == 0.0) return 0.0;
    const double m = std::log1p(std::abs(r));
    return r > 0.0 ? m : -m;
  };
  return {log_readout(r_hs), log_readout(r_vs)};
}

}  // namespace dsnn

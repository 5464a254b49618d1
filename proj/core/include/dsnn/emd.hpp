#pragma once

#include <utility>

#include "dsnn/field.hpp"

namespace dsnn {

// Fully balanced two-tap correlator baseline: one low-passed luminance
// plane against the live frame, opponent subtraction. Single pathway,
// no polarity split, no adaptation.
struct EmdParams {
  int d = 2;              // tap spacing (pixels)
  double tau_lp = 40.0;   // delay arm time constant (ms)
  double frame_rate = 30.0;
};

class EmdDetector {
 public:
  EmdDetector(int rows, int cols, EmdParams params);

  // Correlates the delayed plane with the current frame and compresses the
  // field sums logarithmically: sgn(r) * ln(1 + |r|) for each orientation.
  // The delay plane is advanced with the previous frame first, so the
  // delayed arm is strictly past.
  std::pair<double, double> step(const LuminanceFrame& frame);  // (hs, vs)

  void reset();

 private:
  EmdParams params_;
  int rows_, cols_;
  Field low_pass_;
  Field prev_;
  bool has_prev_ = false;
};

}  // namespace dsnn

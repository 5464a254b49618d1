#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dsnn {

// Dense row-major rows x cols plane of doubles. The unit of exchange between
// all processing layers: luminance, luminance change, polarity channels,
// delay planes and correlator output.
class Field {
 public:
  Field() = default;
  Field(int rows, int cols, double value = 0.0)
      : rows_(rows),
        cols_(cols),
        v_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), value) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }

  double& operator()(int r, int c) { return v_[idx(r, c)]; }
  double operator()(int r, int c) const { return v_[idx(r, c)]; }

  double* row(int r) { return v_.data() + idx(r, 0); }
  const double* row(int r) const { return v_.data() + idx(r, 0); }

  std::vector<double>& values() { return v_; }
  const std::vector<double>& values() const { return v_; }

  bool same_shape(const Field& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  void fill(double value) { std::fill(v_.begin(), v_.end(), value); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
  }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> v_;
};

// One 8-bit grayscale input frame. Values are gray levels in [0, 255];
// index is the position of the frame within its sequence.
struct LuminanceFrame {
  Field data;
  std::int64_t index = 0;
};

}  // namespace dsnn

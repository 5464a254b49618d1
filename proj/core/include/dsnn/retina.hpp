#pragma once

#include <deque>

#include "dsnn/field.hpp"
#include "dsnn/params.hpp"

namespace dsnn {

// Weight of the luminance-change residual from i frames ago:
// a_i = (1 + e^(u*i))^-1. Strictly decreasing in i and in u.
double decay_coefficient(int i, double u);

// Holds up to `capacity` past high-pass outputs, most recent first.
// Single writer, advanced strictly in frame order.
class ResidualBuffer {
 public:
  explicit ResidualBuffer(int capacity) : capacity_(capacity) {}

  // Pushes the newest output, evicting the oldest when full.
  void push(Field p) {
    if (capacity_ == 0) return;
    history_.push_front(std::move(p));
    if (static_cast<int>(history_.size()) > capacity_) history_.pop_back();
  }

  std::size_t size() const { return history_.size(); }
  int capacity() const { return capacity_; }

  // [0] is the most recent output.
  const Field& operator[](std::size_t i) const { return history_[i]; }

  void clear() { history_.clear(); }

 private:
  int capacity_ = 0;
  std::deque<Field> history_;
};

// Temporal high-pass of luminance with decaying residual:
// P(t) = L(t) - L(t-1) + sum_{i=1..n_p} a_i * P(t-i).
// For the first frame the caller passes prev == curr, so P is zero.
// The caller pushes the returned plane into `buf` afterwards.
Field high_pass(const Field& curr, const Field& prev, const ResidualBuffer& buf,
                const Params& p);

}  // namespace dsnn

#include "dsnn/retina.hpp"

#include <cmath>
#include <stdexcept>

namespace dsnn {

double decay_coefficient(int i, double u) { return 1.0 / (1.0 + std::exp(u * i)); }

Field high_pass(const Field& curr, const Field& prev, const ResidualBuffer& buf,
                const Params& p) {
  if (!curr.same_shape(prev)) throw std::invalid_argument("high_pass: frame size mismatch");

  Field out(curr.rows(), curr.cols());
  const std::size_t n = out.size();
  const double* c = curr.values().data();
  const double* q = prev.values().data();
  double* o = out.values().data();
  for (std::size_t k = 0; k < n; ++k) o[k] = c[k] - q[k];

  const std::size_t terms = std::min<std::size_t>(buf.size(), static_cast<std::size_t>(p.n_p));
  for (std::size_t i = 0; i < terms; ++i) {
    const Field& past = buf[i];
    if (!past.same_shape(curr)) throw std::invalid_argument("high_pass: residual size mismatch");
    const double a = decay_coefficient(static_cast<int>(i) + 1, p.u);
    const double* h = past.values().data();
    for (std::size_t k = 0; k < n; ++k) o[k] += a * h[k];
  }
  return out;
}

}  // namespace dsnn

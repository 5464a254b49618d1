#include "dsnn/directional.hpp"

#include <stdexcept>

namespace dsnn {

std::vector<double> tau_schedule(const Params& p) {
  std::vector<double> taus(static_cast<std::size_t>(p.n_con));
  if (p.n_con == 1) {
    taus[0] = p.tau_s_max;
    return taus;
  }
  const double span = p.tau_s_max - p.tau_s_min;
  for (int k = 1; k <= p.n_con; ++k)
    taus[k - 1] = p.tau_s_max - span * (k - 1) / (p.n_con - 1);
  return taus;
}

DelayBank make_delay_bank(int rows, int cols, int n_con) {
  return DelayBank(static_cast<std::size_t>(n_con), Field(rows, cols));
}

void update_delay_bank(const Field& f, DelayBank& bank, const Params& p) {
  if (static_cast<int>(bank.size()) != p.n_con)
    throw std::invalid_argument("update_delay_bank: bank size does not match n_con");
  const std::vector<double> taus = tau_schedule(p);
  const double dt = p.dt_ms();
  const std::size_t n = f.size();
  for (int k = 0; k < p.n_con; ++k) {
    if (!bank[k].same_shape(f))
      throw std::invalid_argument("update_delay_bank: plane size mismatch");
    const double alpha = iir_alpha(taus[k], dt);
    double* b = bank[k].values().data();
    const double* x = f.values().data();
    for (std::size_t i = 0; i < n; ++i) b[i] += alpha * (x[i] - b[i]);
  }
}

Field correlate_horizontal(const Field& f, const DelayBank& bank, const Params& p) {
  const int rows = f.rows();
  const int cols = f.cols();
  Field excite(rows, cols);
  Field inhibit(rows, cols);
  for (int k = 1; k <= p.n_con; ++k) {
    const Field& delayed = bank[k - 1];
    if (!delayed.same_shape(f))
      throw std::invalid_argument("correlate_horizontal: plane size mismatch");
    const int off = k * p.d;
    if (off >= cols) continue;
    for (int y = 0; y < rows; ++y) {
      const double* dv = delayed.row(y);
      const double* fv = f.row(y);
      double* e = excite.row(y);
      double* i = inhibit.row(y);
      for (int x = 0; x + off < cols; ++x) {
        e[x] += dv[x] * fv[x + off];
        i[x] += dv[x + off] * fv[x];
      }
    }
  }
  Field out(rows, cols);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i)
    out.values()[i] = excite.values()[i] - p.w_i * inhibit.values()[i];
  return out;
}

Field correlate_vertical(const Field& f, const DelayBank& bank, const Params& p) {
  const int rows = f.rows();
  const int cols = f.cols();
  Field excite(rows, cols);
  Field inhibit(rows, cols);
  for (int k = 1; k <= p.n_con; ++k) {
    const Field& delayed = bank[k - 1];
    if (!delayed.same_shape(f))
      throw std::invalid_argument("correlate_vertical: plane size mismatch");
    const int off = k * p.d;
    if (off >= rows) continue;
    for (int y = 0; y + off < rows; ++y) {
      const double* dv = delayed.row(y);
      const double* dv_off = delayed.row(y + off);
      const double* fv = f.row(y);
      const double* fv_off = f.row(y + off);
      double* e = excite.row(y);
      double* i = inhibit.row(y);
      for (int x = 0; x < cols; ++x) {
        e[x] += dv[x] * fv_off[x];
        i[x] += dv_off[x] * fv[x];
      }
    }
  }
  Field out(rows, cols);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i)
    out.values()[i] = excite.values()[i] - p.w_i * inhibit.values()[i];
  return out;
}

}  // namespace dsnn

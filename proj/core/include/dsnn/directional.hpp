#pragma once

#include <vector>

#include "dsnn/field.hpp"
#include "dsnn/params.hpp"

namespace dsnn {

// One low-passed copy of a polarity channel per connection, planes[k-1]
// carrying the delay paired with spatial offset k*d.
using DelayBank = std::vector<Field>;

// The four correlator output planes: ON pathway (me_*) and OFF pathway
// (lo_*), each split into horizontal and vertical systems.
struct CorrelatorOutput {
  Field me_hs, me_vs;
  Field lo_hs, lo_vs;
};

// Delay time constants per connection index k = 1..n_con, linearly decaying
// from tau_s_max at the nearest connection to tau_s_min at the farthest, so
// wider spacings pair with shorter delays. n_con = 1 uses tau_s_max.
std::vector<double> tau_schedule(const Params& p);

DelayBank make_delay_bank(int rows, int cols, int n_con);

// Advances every plane one frame: planes[k] += alpha(tau_k) * (f - planes[k]).
void update_delay_bank(const Field& f, DelayBank& bank, const Params& p);

// Multi-connection correlation along +x (rightward preferred):
//   E(x,y) = sum_k bank[k](x,y)     * f(x + k*d, y)
//   I(x,y) = sum_k bank[k](x+k*d,y) * f(x, y)
//   out    = E - w_i * I
// Connections reaching outside the field contribute 0 to both terms.
Field correlate_horizontal(const Field& f, const DelayBank& bank, const Params& p);

// Same along +y (downward preferred).
Field correlate_vertical(const Field& f, const DelayBank& bank, const Params& p);

}  // namespace dsnn

#pragma once

#include <string>
#include <string_view>

namespace dsnn {

// Pathway blocking mode. Blocking zeroes one polarity channel right after
// rectification; both runs traverse identical code otherwise.
enum class Ablation { intact, on_blocked, off_blocked };

// Full model configuration. Time constants are in milliseconds, spatial
// quantities in pixels. Immutable after validate(); freely shareable.
struct Params {
  int rows = 0;              // field height (pixels)
  int cols = 0;              // field width (pixels)
  double frame_rate = 30.0;  // Hz
  double u = 1.0;            // residual decay steepness
  int n_p = 2;               // residual history length (frames)
  double sigma_e = 2.0;      // center Gaussian std (pixels)
  double sigma_i = 4.0;      // surround Gaussian std (pixels)
  double sigma_l = 0.1;      // polarity residual pass-through fraction
  double tau_fast = 1.0;     // adaptation onset time constant (ms)
  double tau_slow = 100.0;   // adaptation decay time constant (ms)
  int n_con = 4;             // connections per local cell
  int d = 2;                 // spacing increment between connections (pixels)
  double w_i = 0.9;          // inhibition bias of the correlator
  double tau_s_min = 10.0;   // delay bank schedule, farthest connection (ms)
  double tau_s_max = 200.0;  // delay bank schedule, nearest connection (ms)
  double tau_mp = 10.0;      // membrane potential smoothing (ms)
  double k_sig = 0.01;       // sigmoid scale coefficient
  double delta_c = 0.5;      // sigmoid centering offset
  double k_sp = 2.0;         // spike rate coefficient
  double t_sp = 0.16;        // spiking threshold magnitude
  Ablation ablation = Ablation::intact;

  // Frame interval, derived so all time constants stay in physical ms.
  double dt_ms() const { return 1000.0 / frame_rate; }
};

// Discrete first-order low-pass coefficient for time constant tau at frame
// interval dt (both ms): D <- D + alpha * (x - D). Stable for all tau > 0
// and reduces to pass-through as tau -> 0.
inline double iir_alpha(double tau_ms, double dt_ms) { return dt_ms / (tau_ms + dt_ms); }

// Default configuration for a rows x cols field.
// Throws std::invalid_argument when the size cannot host the defaults.
Params default_params(int rows, int cols);

// Returns the record unchanged if every invariant holds; otherwise throws
// std::invalid_argument naming the first violated invariant.
Params validate(Params p);

// Applies "key = value" configuration text on top of `base`. Lines starting
// with '#' and blank lines are ignored; unknown keys are errors.
Params apply_config_text(Params base, std::string_view text);

// Same, reading the text from a file.
Params load_config_file(Params base, const std::string& path);

const char* to_string(Ablation a);
Ablation ablation_from_string(std::string_view s);

}  // namespace dsnn

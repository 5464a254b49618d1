#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dsnn/lptc.hpp"
#include "dsnn/params.hpp"
#include "dsnn/stimuli.hpp"

namespace dsnn {

enum class ModelSelect { dsnn, emd, both };

ModelSelect model_from_string(std::string_view s);

// One CSV row. Real values are stored already snapped to the 6 significant
// digits they are printed with, so summaries recomputed from an emitted
// file match the in-memory ones exactly.
struct FrameRow {
  std::int64_t frame = 0;
  double hs_smp = 0.0, vs_smp = 0.0;
  double lp_on_hs = 0.0, lp_off_hs = 0.0;
  double lp_on_vs = 0.0, lp_off_vs = 0.0;
  int hs_spikes = 0, vs_spikes = 0;
  Direction hs_dir = Direction::none;
  Direction vs_dir = Direction::none;
  double emd_hs = 0.0, emd_vs = 0.0;
};

struct RunSummary {
  std::int64_t frames = 0;
  double peak_abs_hs = 0.0, peak_abs_vs = 0.0;
  std::int64_t hs_preferred_spikes = 0, hs_null_spikes = 0;
  std::int64_t vs_preferred_spikes = 0, vs_null_spikes = 0;
  std::int64_t hs_frames_above = 0, vs_frames_above = 0;
};

struct RunReport {
  ModelSelect model = ModelSelect::dsnn;
  double t_sp = 0.16;
  std::vector<FrameRow> rows;

  RunSummary summary() const;
  void write_csv(std::ostream& out) const;
  std::string csv_header() const;
  void print_summary(std::ostream& out) const;
};

// Pull-based frame source; returns nullopt when exhausted.
using FrameSource = std::function<std::optional<LuminanceFrame>()>;

FrameSource scene_source(const SceneSpec& spec);

// Runs the selected model(s) over every frame of the source.
// Throws "empty sequence" when the source yields nothing.
RunReport run_model(const FrameSource& source, const Params& params, ModelSelect model);

// One cell of a sweep grid: peak responses while the object is in view.
// Peaks are signed, selected by magnitude.
struct SweepCell {
  double gray = 0.0;
  double vt = 0.0;
  double vb = 0.0;
  double peak_hs = 0.0;
  double peak_vs = 0.0;
};

// Sweep configuration: the correlator ensemble widened so its connection
// span covers the suite's object displacements, on top of the standard
// defaults for the given field size.
Params sweep_params(int rows, int cols);

// Suites: "speed" (3 object speeds x 5 background velocities) and
// "gray" (5 gray levels x 5 object speeds at fixed background velocity).
// Unknown names raise an error listing the valid ones.
std::vector<SweepCell> run_sweep(const std::string& suite, const Params& base);

void write_sweep_csv(std::ostream& out, const std::string& suite,
                     const std::vector<SweepCell>& cells);

// Formats a real exactly as the CSV writer does (6 significant digits).
std::string format_real(double v);

// Value after a round trip through format_real.
double snap_real(double v);

}  // namespace dsnn

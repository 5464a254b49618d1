#include "dsnn/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "dsnn/pipeline.hpp"
#include "dsnn/emd.hpp"

namespace dsnn {

ModelSelect model_from_string(std::string_view s) {
  if (s == "dsnn") return ModelSelect::dsnn;
  if (s == "emd") return ModelSelect::emd;
  if (s == "both") return ModelSelect::both;
  throw std::invalid_argument("unknown model '" + std::string(s) +
                              "' (expected dsnn, emd or both)");
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double snap_real(double v) { return std::strtod(format_real(v).c_str(), nullptr); }

RunSummary RunReport::summary() const {
  RunSummary s;
  s.frames = static_cast<std::int64_t>(rows.size());
  for (const FrameRow& r : rows) {
    s.peak_abs_hs = std::max(s.peak_abs_hs, std::abs(r.hs_smp));
    s.peak_abs_vs = std::max(s.peak_abs_vs, std::abs(r.vs_smp));
    if (r.hs_dir == Direction::preferred) s.hs_preferred_spikes += r.hs_spikes;
    if (r.hs_dir == Direction::null) s.hs_null_spikes += r.hs_spikes;
    if (r.vs_dir == Direction::preferred) s.vs_preferred_spikes += r.vs_spikes;
    if (r.vs_dir == Direction::null) s.vs_null_spikes += r.vs_spikes;
    if (std::abs(r.hs_smp) >= t_sp) ++s.hs_frames_above;
    if (std::abs(r.vs_smp) >= t_sp) ++s.vs_frames_above;
  }
  return s;
}

std::string RunReport::csv_header() const {
  switch (model) {
    case ModelSelect::dsnn:
      return "frame,hs_smp,vs_smp,lp_on_hs,lp_off_hs,lp_on_vs,lp_off_vs,"
             "hs_spikes,hs_dir,vs_spikes,vs_dir";
    case ModelSelect::emd:
      return "frame,emd_hs,emd_vs";
    case ModelSelect::both:
      return "frame,hs_smp,vs_smp,lp_on_hs,lp_off_hs,lp_on_vs,lp_off_vs,"
             "hs_spikes,hs_dir,vs_spikes,vs_dir,emd_hs,emd_vs";
  }
  return {};
}

void RunReport::write_csv(std::ostream& out) const {
  out << csv_header() << "\n";
  for (const FrameRow& r : rows) {
    out << r.frame;
    if (model != ModelSelect::emd) {
      out << ',' << format_real(r.hs_smp) << ',' << format_real(r.vs_smp) << ','
          << format_real(r.lp_on_hs) << ',' << format_real(r.lp_off_hs) << ','
          << format_real(r.lp_on_vs) << ',' << format_real(r.lp_off_vs) << ',' << r.hs_spikes
          << ',' << to_string(r.hs_dir) << ',' << r.vs_spikes << ',' << to_string(r.vs_dir);
    }
    if (model != ModelSelect::dsnn)
      out << ',' << format_real(r.emd_hs) << ',' << format_real(r.emd_vs);
    out << "\n";
  }
}

void RunReport::print_summary(std::ostream& out) const {
  const RunSummary s = summary();
  out << "frames processed:      " << s.frames << "\n";
  if (model != ModelSelect::emd) {
    out << "peak |hs_smp|:         " << format_real(s.peak_abs_hs) << "\n"
        << "peak |vs_smp|:         " << format_real(s.peak_abs_vs) << "\n"
        << "hs spikes (pref/null): " << s.hs_preferred_spikes << "/" << s.hs_null_spikes << "\n"
        << "vs spikes (pref/null): " << s.vs_preferred_spikes << "/" << s.vs_null_spikes << "\n"
        << "frames above t_sp:     hs " << s.hs_frames_above << ", vs " << s.vs_frames_above
        << "\n";
  } else {
    double peak_hs = 0.0, peak_vs = 0.0;
    for (const FrameRow& r : rows) {
      peak_hs = std::max(peak_hs, std::abs(r.emd_hs));
      peak_vs = std::max(peak_vs, std::abs(r.emd_vs));
    }
    out << "peak |emd_hs|:         " << format_real(peak_hs) << "\n"
        << "peak |emd_vs|:         " << format_real(peak_vs) << "\n";
  }
}

FrameSource scene_source(const SceneSpec& spec) {
  int t = 0;
  return [spec, t]() mutable -> std::optional<LuminanceFrame> {
    if (t >= spec.duration) return std::nullopt;
    return render(spec, t++);
  };
}

RunReport run_model(const FrameSource& source, const Params& params, ModelSelect model) {
  RunReport report;
  report.model = model;
  report.t_sp = params.t_sp;

  std::optional<Pipeline> pipe;
  std::optional<EmdDetector> emd;
  if (model != ModelSelect::emd) pipe.emplace(params);
  if (model != ModelSelect::dsnn)
    emd.emplace(params.rows, params.cols,
                EmdParams{params.d, 40.0, params.frame_rate});

  while (auto frame = source()) {
    FrameRow row;
    row.frame = frame->index;
    if (pipe) {
      const NetworkOutput out = pipe->step(*frame);
      row.frame = out.frame;
      row.hs_smp = snap_real(out.hs_smp);
      row.vs_smp = snap_real(out.vs_smp);
      row.lp_on_hs = snap_real(out.lp_on_hs);
      row.lp_off_hs = snap_real(out.lp_off_hs);
      row.lp_on_vs = snap_real(out.lp_on_vs);
      row.lp_off_vs = snap_real(out.lp_off_vs);
      row.hs_spikes = out.hs_spikes;
      row.vs_spikes = out.vs_spikes;
      row.hs_dir = out.hs_dir;
      row.vs_dir = out.vs_dir;
    }
    if (emd) {
      const auto [hs, vs] = emd->step(*frame);
      row.emd_hs = snap_real(hs);
      row.emd_vs = snap_real(vs);
    }
    report.rows.push_back(row);
  }
  if (report.rows.empty()) throw std::runtime_error("empty sequence");
  return report;
}

namespace {

// Peak responses over the frames where the object is in view (plus a short
// tail for the readout lag), signed, selected by magnitude.
SweepCell sweep_cell(const SceneSpec& scene, const Params& base) {
  Params p = base;
  p.rows = scene.rows;
  p.cols = scene.cols;
  p = validate(p);

  const auto [first, last] = object_active_window(scene);
  const int until = std::min(scene.duration - 1, last + 2);

  Pipeline pipe(p);
  SweepCell cell;
  cell.vb = scene.background_shift;
  double best_hs = 0.0, best_vs = 0.0;
  for (int t = 0; t < scene.duration; ++t) {
    const NetworkOutput out = pipe.step(render(scene, t));
    if (t < first || t > until) continue;
    if (std::abs(out.hs_smp) > std::abs(best_hs)) best_hs = out.hs_smp;
    if (std::abs(out.vs_smp) > std::abs(best_vs)) best_vs = out.vs_smp;
  }
  cell.peak_hs = snap_real(best_hs);
  cell.peak_vs = snap_real(best_vs);
  return cell;
}

}  // namespace

Params sweep_params(int rows, int cols) {
  Params p = default_params(rows, cols);
  // The suites move the object tens of pixels per frame; pair distant
  // connections (up to 120 px) with the short end of the delay schedule so
  // those displacements fall inside the ensemble's span. The background
  // shift stays below the smallest spacing and barely registers.
  p.n_con = 8;
  p.d = 15;
  p.sigma_e = 4.0;
  p.sigma_i = 8.0;
  return validate(p);
}

std::vector<SweepCell> run_sweep(const std::string& suite, const Params& base) {
  const auto lib = scene_library();
  std::vector<SweepCell> cells;
  if (suite == "speed") {
    for (int vt : {40, 80, 120})
      for (int vb : {-2, -4, -6, -8, -10}) {
        const SceneSpec& scene =
            lib.at("sweep-vt" + std::to_string(vt) + "-vb" + std::to_string(vb));
        SweepCell cell = sweep_cell(scene, base);
        cell.vt = vt;
        cell.gray = scene.object_gray;
        cells.push_back(cell);
      }
  } else if (suite == "gray") {
    for (int gray : {0, 64, 128, 191, 255})
      for (int vt : {40, 60, 80, 100, 120}) {
        const SceneSpec& scene =
            lib.at("gray-g" + std::to_string(gray) + "-vt" + std::to_string(vt));
        SweepCell cell = sweep_cell(scene, base);
        cell.vt = vt;
        cell.gray = gray;
        cells.push_back(cell);
      }
  } else {
    throw std::invalid_argument("unknown sweep suite '" + suite +
                                "' (valid suites: speed, gray)");
  }
  return cells;
}

void write_sweep_csv(std::ostream& out, const std::string& suite,
                     const std::vector<SweepCell>& cells) {
  if (suite == "speed")
    out << "vt,vb,peak_hs_smp,peak_vs_smp\n";
  else
    out << "gray,vt,vb,peak_hs_smp,peak_vs_smp\n";
  for (const SweepCell& c : cells) {
    if (suite != "speed") out << format_real(c.gray) << ',';
    out << format_real(c.vt) << ',' << format_real(c.vb) << ',' << format_real(c.peak_hs) << ','
        << format_real(c.peak_vs) << "\n";
  }
}

}  // namespace dsnn

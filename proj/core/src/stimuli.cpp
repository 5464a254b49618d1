#include "dsnn/stimuli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsnn {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic lattice value in [0, 1) for one noise octave.
double lattice_value(std::uint64_t seed, int octave, int ix, int iy) {
  std::uint64_t h = mix64(seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(octave + 1)));
  h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)));
  h = mix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(iy)) << 32));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

// Multi-octave value noise, periodic in x with period `cols` and in y with
// period `rows`. Stands in for a natural cluttered background: mid-band
// spatial structure, mean gray near 128.
double texture_gray(std::uint64_t seed, int rows, int cols, int x, int y) {
  // Base lattice cells are roughly 64 px; each octave halves them. The two
  // fine octaves carry most of the energy the band-pass layer responds to.
  static constexpr double kAmps[4] = {1.0, 0.7, 0.8, 0.6};
  const int nx0 = std::max(2, cols / 64);
  const int ny0 = std::max(2, rows / 64);
  double value = 0.0;
  double total = 0.0;
  for (int o = 0; o < 4; ++o) {
    const double amp = kAmps[o];
    const int nx = nx0 << o;
    const int ny = ny0 << o;
    const double fx = static_cast<double>(x) * nx / cols;
    const double fy = static_cast<double>(y) * ny / rows;
    const int ix = static_cast<int>(std::floor(fx));
    const int iy = static_cast<int>(std::floor(fy));
    const double tx = smoothstep(fx - ix);
    const double ty = smoothstep(fy - iy);
    const double v00 = lattice_value(seed, o, ix % nx, iy % ny);
    const double v10 = lattice_value(seed, o, (ix + 1) % nx, iy % ny);
    const double v01 = lattice_value(seed, o, ix % nx, (iy + 1) % ny);
    const double v11 = lattice_value(seed, o, (ix + 1) % nx, (iy + 1) % ny);
    const double top = v00 + tx * (v10 - v00);
    const double bottom = v01 + tx * (v11 - v01);
    value += amp * (top + ty * (bottom - top));
    total += amp;
  }
  return std::round(255.0 * value / total);
}

int wrap(int v, int period) { return ((v % period) + period) % period; }

struct Rect {
  int x0, y0, x1, y1;  // half-open
  bool empty() const { return x0 >= x1 || y0 >= y1; }
};

Rect object_rect(const SceneSpec& s, int t) {
  if (s.motion == MotionMode::translate) {
    const int left = static_cast<int>(std::llround(s.origin_x + s.vx * t));
    const int top = static_cast<int>(std::llround(s.origin_y + s.vy * t));
    return {left, top, left + static_cast<int>(std::llround(s.width)),
            top + static_cast<int>(std::llround(s.height))};
  }
  const double dir = (s.motion == MotionMode::loom) ? 1.0 : -1.0;
  const double half = s.half_width0 + dir * s.edge_rate * t;
  if (half <= 0.0) return {0, 0, 0, 0};
  const int h = static_cast<int>(std::llround(half));
  const int cx = static_cast<int>(std::llround(s.center_x));
  const int cy = static_cast<int>(std::llround(s.center_y));
  return {cx - h, cy - h, cx + h, cy + h};
}

}  // namespace

LuminanceFrame render(const SceneSpec& spec, int t) {
  if (t < 0 || t >= spec.duration)
    throw std::out_of_range("render: frame index outside scene duration");
  if (std::abs(spec.background_shift) >= spec.cols)
    throw std::invalid_argument("render: |background_shift| must be < cols");

  LuminanceFrame frame;
  frame.index = t;
  frame.data = Field(spec.rows, spec.cols);

  if (spec.background == BackgroundMode::uniform) {
    frame.data.fill(spec.background_gray);
  } else {
    const int offset = static_cast<int>(std::llround(spec.background_shift * t));
    for (int y = 0; y < spec.rows; ++y) {
      double* row = frame.data.row(y);
      for (int x = 0; x < spec.cols; ++x)
        row[x] = texture_gray(spec.texture_seed, spec.rows, spec.cols,
                              wrap(x + offset, spec.cols), y);
    }
  }

  // Object drawn last, clipped at the borders.
  Rect r = object_rect(spec, t);
  r.x0 = std::max(r.x0, 0);
  r.y0 = std::max(r.y0, 0);
  r.x1 = std::min(r.x1, spec.cols);
  r.y1 = std::min(r.y1, spec.rows);
  for (int y = r.y0; y < r.y1; ++y) {
    double* row = frame.data.row(y);
    for (int x = r.x0; x < r.x1; ++x) row[x] = spec.object_gray;
  }
  return frame;
}

std::pair<int, int> object_active_window(const SceneSpec& spec) {
  int first = -1, last = -1;
  for (int t = 0; t < spec.duration; ++t) {
    Rect r = object_rect(spec, t);
    const bool visible = !(r.empty() || r.x1 <= 0 || r.y1 <= 0 || r.x0 >= spec.cols ||
                           r.y0 >= spec.rows);
    if (visible) {
      if (first < 0) first = t;
      last = t;
    }
  }
  if (first < 0) return {0, -1};
  return {first, last};
}

SceneSpec mirrored(const SceneSpec& spec) {
  SceneSpec m = spec;
  m.name = spec.name + "-mirrored";
  m.vx = -spec.vx;
  m.origin_x = spec.cols - spec.origin_x - spec.width;
  m.center_x = spec.cols - spec.center_x;
  m.background_shift = -spec.background_shift;
  return m;
}

Field mirror_horizontal(const Field& f) {
  Field out(f.rows(), f.cols());
  for (int y = 0; y < f.rows(); ++y) {
    const double* src = f.row(y);
    double* dst = out.row(y);
    for (int x = 0; x < f.cols(); ++x) dst[x] = src[f.cols() - 1 - x];
  }
  return out;
}

namespace {

// Pinned scene geometry. Object sizes and the clean-scene speed are artifact
// defaults; the sweep grids (speeds, background velocities, gray levels) and
// the field sizes are fixed by the experiment protocol.
constexpr int kCleanCols = 320, kCleanRows = 180;
constexpr int kClutterCols = 540, kClutterRows = 180;
constexpr std::uint64_t kTextureSeed = 42;
constexpr double kCleanSpeed = 4.0;

SceneSpec clean_translate(bool dark, char dir) {
  SceneSpec s;
  s.rows = kCleanRows;
  s.cols = kCleanCols;
  s.kind = ObjectKind::bar;
  s.object_gray = dark ? 0.0 : 255.0;
  s.background = BackgroundMode::uniform;
  s.background_gray = dark ? 255.0 : 0.0;
  s.motion = MotionMode::translate;
  const bool horizontal = (dir == 'R' || dir == 'L');
  s.width = horizontal ? 30.0 : 120.0;
  s.height = horizontal ? 120.0 : 30.0;
  const double span = horizontal ? kCleanCols + s.width : kCleanRows + s.height;
  s.duration = static_cast<int>(std::ceil(span / kCleanSpeed)) + 4;
  switch (dir) {
    case 'R':
      s.vx = kCleanSpeed;
      s.origin_x = -s.width;
      s.origin_y = (kCleanRows - s.height) / 2.0;
      break;
    case 'L':
      s.vx = -kCleanSpeed;
      s.origin_x = kCleanCols;
      s.origin_y = (kCleanRows - s.height) / 2.0;
      break;
    case 'D':
      s.vy = kCleanSpeed;
      s.origin_x = (kCleanCols - s.width) / 2.0;
      s.origin_y = -s.height;
      break;
    case 'U':
      s.vy = -kCleanSpeed;
      s.origin_x = (kCleanCols - s.width) / 2.0;
      s.origin_y = kCleanRows;
      break;
  }
  return s;
}

SceneSpec clean_depth(bool dark, bool loom) {
  SceneSpec s;
  s.rows = kCleanRows;
  s.cols = kCleanCols;
  s.kind = ObjectKind::square;
  s.object_gray = dark ? 0.0 : 255.0;
  s.background = BackgroundMode::uniform;
  s.background_gray = dark ? 255.0 : 0.0;
  s.motion = loom ? MotionMode::loom : MotionMode::recede;
  s.center_x = kCleanCols / 2.0;
  s.center_y = kCleanRows / 2.0;
  s.edge_rate = 2.0;
  s.duration = 40;
  s.half_width0 = loom ? 5.0 : 83.0;
  return s;
}

SceneSpec clutter_translate(double vt, double vb, double gray) {
  SceneSpec s;
  s.rows = kClutterRows;
  s.cols = kClutterCols;
  s.kind = ObjectKind::bar;
  s.object_gray = gray;
  s.background = BackgroundMode::textured;
  s.texture_seed = kTextureSeed;
  s.motion = MotionMode::translate;
  s.vx = vt;
  s.width = 300.0;
  s.height = 170.0;
  s.origin_y = (kClutterRows - s.height) / 2.0;
  // Ten background-only frames so the filters settle before the leading
  // edge enters.
  s.origin_x = -s.width - vt * 10.0;
  s.background_shift = vb;
  const double exit = (kClutterCols - s.origin_x) / vt;
  s.duration = static_cast<int>(std::ceil(exit)) + 3;
  return s;
}

SceneSpec clutter_depth(bool loom) {
  SceneSpec s;
  s.rows = kClutterRows;
  s.cols = kClutterCols;
  s.kind = ObjectKind::square;
  s.object_gray = 0.0;
  s.background = BackgroundMode::textured;
  s.texture_seed = kTextureSeed;
  s.motion = loom ? MotionMode::loom : MotionMode::recede;
  s.center_x = kClutterCols / 2.0;
  s.center_y = kClutterRows / 2.0;
  s.edge_rate = 2.0;
  s.duration = 36;
  s.half_width0 = loom ? 5.0 : 75.0;
  s.background_shift = 8.0;
  return s;
}

}  // namespace

std::map<std::string, SceneSpec> scene_library() {
  std::map<std::string, SceneSpec> lib;
  auto add = [&lib](std::string name, SceneSpec s) {
    s.name = name;
    lib.emplace(std::move(name), std::move(s));
  };

  for (bool dark : {true, false}) {
    const std::string tone = dark ? "dark" : "light";
    for (char dir : {'R', 'L', 'U', 'D'})
      add("clean-translate-" + tone + "-" + dir, clean_translate(dark, dir));
    add("clean-loom-" + tone, clean_depth(dark, true));
    add("clean-recede-" + tone, clean_depth(dark, false));
  }

  add("clutter-shift-translate", clutter_translate(80.0, -8.0, 0.0));
  add("clutter-shift-loom", clutter_depth(true));
  add("clutter-shift-recede", clutter_depth(false));

  // Speed sweep: dark object at three speeds against five background
  // velocities.
  for (int vt : {40, 80, 120})
    for (int vb : {-2, -4, -6, -8, -10})
      add("sweep-vt" + std::to_string(vt) + "-vb" + std::to_string(vb),
          clutter_translate(vt, vb, 0.0));

  // Gray-level sweep: five object gray levels at five speeds, fixed
  // background velocity -8.
  for (int gray : {0, 64, 128, 191, 255})
    for (int vt : {40, 60, 80, 100, 120})
      add("gray-g" + std::to_string(gray) + "-vt" + std::to_string(vt),
          clutter_translate(vt, -8.0, gray));

  return lib;
}

}  // namespace dsnn

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "dsnn/field.hpp"

namespace dsnn {

enum class ObjectKind { bar, square };
enum class BackgroundMode { uniform, textured };
enum class MotionMode { translate, loom, recede };

// Analytic description of one synthetic test scene. Rendering is a pure
// function of (spec, frame index); identical inputs give identical frames.
struct SceneSpec {
  std::string name;
  int rows = 180;
  int cols = 320;

  ObjectKind kind = ObjectKind::bar;
  double object_gray = 0.0;

  BackgroundMode background = BackgroundMode::uniform;
  double background_gray = 255.0;
  std::uint64_t texture_seed = 0;

  MotionMode motion = MotionMode::translate;
  // translate: top-left corner at (origin_x + vx*t, origin_y + vy*t),
  // size width x height.
  double vx = 0.0, vy = 0.0;
  double origin_x = 0.0, origin_y = 0.0;
  double width = 0.0, height = 0.0;
  // loom / recede: square centered at (center_x, center_y) whose half-width
  // grows or shrinks by edge_rate pixels per frame from half_width0.
  double center_x = 0.0, center_y = 0.0;
  double half_width0 = 0.0;
  double edge_rate = 0.0;

  // Horizontal shift of the textured background, pixels per frame, signed.
  // Frame t samples the base texture at column (c + round(vb*t)) mod cols.
  double background_shift = 0.0;

  int duration = 0;  // frames
};

// Renders frame t of the scene. Throws when t is outside [0, duration) or
// |background_shift| >= cols.
LuminanceFrame render(const SceneSpec& spec, int t);

// The named stimulus suite: clean translations in four cardinal directions
// for dark and light objects, clean looming/recession, cluttered shifting
// background scenes, and the speed and gray-level sweep grids.
std::map<std::string, SceneSpec> scene_library();

// Inclusive frame range [first, last] during which the object intersects
// the field (translate) or is being animated (loom/recede).
std::pair<int, int> object_active_window(const SceneSpec& spec);

// Horizontal mirror of the scene geometry and motion. For uniform
// backgrounds and integral positions/velocities, rendering the mirrored
// spec equals mirroring the rendered frames.
SceneSpec mirrored(const SceneSpec& spec);

// Flips the columns of a plane; used with mirrored() and by symmetry tests.
Field mirror_horizontal(const Field& f);

}  // namespace dsnn

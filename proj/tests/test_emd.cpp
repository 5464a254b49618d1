#include <doctest.h>

#include <cmath>

#include "dsnn/emd.hpp"
#include "dsnn/stimuli.hpp"

using namespace dsnn;

TEST_CASE("constant video cancels symmetrically") {
  EmdDetector emd(12, 16, EmdParams{});
  Field frame(12, 16, 137.0);
  for (int t = 0; t < 10; ++t) {
    const auto [hs, vs] = emd.step(LuminanceFrame{frame, t});
    CHECK(hs == 0.0);
    CHECK(vs == 0.0);
  }
}

TEST_CASE("a static structured scene stays near zero") {
  EmdDetector emd(12, 16, EmdParams{});
  Field frame(12, 16);
  for (int y = 0; y < 12; ++y)
    for (int x = 0; x < 16; ++x) frame(y, x) = 10.0 + 3.0 * x + 2.0 * y;
  for (int t = 0; t < 10; ++t) {
    const auto [hs, vs] = emd.step(LuminanceFrame{frame, t});
    CHECK(hs == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(vs == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("a rightward moving edge drives hs positive") {
  EmdDetector emd(4, 24, EmdParams{});
  double total = 0.0;
  for (int t = 0; t < 10; ++t) {
    Field f(4, 24, 0.0);
    for (int y = 0; y < 4; ++y)
      for (int x = 0; x < 2 * t + 2 && x < 24; ++x) f(y, x) = 200.0;  // edge marches right
    const auto [hs, vs] = emd.step(LuminanceFrame{std::move(f), t});
    total += hs;
    CHECK(vs == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK(total > 0.0);
}

TEST_CASE("zero correlation maps to zero through the log readout") {
  EmdDetector emd(6, 8, EmdParams{});
  const auto [hs, vs] = emd.step(LuminanceFrame{Field(6, 8, 0.0), 0});
  CHECK(hs == 0.0);
  CHECK(vs == 0.0);
}

TEST_CASE("mirroring the stimulus negates hs") {
  SceneSpec s;
  s.rows = 32;
  s.cols = 64;
  s.object_gray = 0.0;
  s.background = BackgroundMode::uniform;
  s.background_gray = 255.0;
  s.motion = MotionMode::translate;
  s.vx = 3.0;
  s.origin_x = 2.0;
  s.origin_y = 8.0;
  s.width = 8.0;
  s.height = 16.0;
  s.duration = 18;

  EmdDetector a(32, 64, EmdParams{});
  EmdDetector b(32, 64, EmdParams{});
  const SceneSpec m = mirrored(s);
  for (int t = 0; t < s.duration; ++t) {
    const auto [hs_a, vs_a] = a.step(render(s, t));
    const auto [hs_b, vs_b] = b.step(render(m, t));
    CHECK(hs_b == doctest::Approx(-hs_a).epsilon(1e-9));
    CHECK(vs_b == doctest::Approx(vs_a).epsilon(1e-9));
  }
}

TEST_CASE("frame size mismatches are rejected") {
  EmdDetector emd(6, 8, EmdParams{});
  CHECK_THROWS_AS(emd.step(LuminanceFrame{Field(6, 9, 0.0), 0}), std::invalid_argument);
}

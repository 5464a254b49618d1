#include <benchmark/benchmark.h>

#include <vector>

#include "dsnn/lamina.hpp"
#include "dsnn/pipeline.hpp"
#include "dsnn/stimuli.hpp"

using namespace dsnn;

namespace {

std::vector<LuminanceFrame> prerender(int rows, int cols, int frames) {
  SceneSpec s;
  s.rows = rows;
  s.cols = cols;
  s.object_gray = 0.0;
  s.background = BackgroundMode::textured;
  s.texture_seed = 7;
  s.background_shift = -4.0;
  s.motion = MotionMode::translate;
  s.vx = 6.0;
  s.origin_x = -30.0;
  s.origin_y = rows / 4.0;
  s.width = 30.0;
  s.height = rows / 2.0;
  s.duration = frames;
  std::vector<LuminanceFrame> out;
  out.reserve(frames);
  for (int t = 0; t < frames; ++t) out.push_back(render(s, t));
  return out;
}

void step_benchmark(benchmark::State& state, int rows, int cols) {
  const auto frames = prerender(rows, cols, 32);
  Pipeline pipe(default_params(rows, cols));
  std::int64_t index = 0;
  std::size_t i = 0;
  for (auto _ : state) {
    LuminanceFrame f = frames[i];
    f.index = index++;
    benchmark::DoNotOptimize(pipe.step(f));
    i = (i + 1) % frames.size();
  }
  state.SetItemsProcessed(state.iterations());
}

}  // namespace

static void StepEmbedded(benchmark::State& state) { step_benchmark(state, 72, 99); }
BENCHMARK(StepEmbedded);

static void StepDesk(benchmark::State& state) { step_benchmark(state, 180, 320); }
BENCHMARK(StepDesk);

static void BandPass(benchmark::State& state) {
  const auto frames = prerender(180, 320, 1);
  const Kernel ke = gaussian_kernel(2.0);
  const Kernel ki = gaussian_kernel(4.0);
  for (auto _ : state) benchmark::DoNotOptimize(dog_filter(frames[0].data, ke, ki));
}
BENCHMARK(BandPass);

static void Correlator(benchmark::State& state) {
  Params p = default_params(180, 320);
  const auto frames = prerender(180, 320, 1);
  DelayBank bank = make_delay_bank(180, 320, p.n_con);
  update_delay_bank(frames[0].data, bank, p);
  for (auto _ : state) benchmark::DoNotOptimize(correlate_horizontal(frames[0].data, bank, p));
}
BENCHMARK(Correlator);

BENCHMARK_MAIN();

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dsnn/pgm.hpp"
#include "dsnn/report.hpp"
#include "dsnn/stimuli.hpp"

using namespace dsnn;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("dsnn_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

SceneSpec tiny_scene() {
  SceneSpec s;
  s.rows = 24;
  s.cols = 40;
  s.object_gray = 0.0;
  s.background = BackgroundMode::uniform;
  s.background_gray = 255.0;
  s.motion = MotionMode::translate;
  s.vx = 3.0;
  s.origin_x = -6.0;
  s.origin_y = 4.0;
  s.width = 6.0;
  s.height = 16.0;
  s.duration = 16;
  return s;
}

}  // namespace

TEST_CASE("pgm round trip preserves pixels and header layout") {
  TempDir tmp;
  Field f(3, 5);
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 5; ++x) f(y, x) = (y * 5 + x) * 17 % 256;

  const fs::path file = tmp.path / "frame_000.pgm";
  write_pgm(file, f);

  std::ifstream in(file, std::ios::binary);
  std::string header(3, '\0');
  in.read(header.data(), 3);
  CHECK(header == "P5\n");

  const Field back = read_pgm(file);
  CHECK(back == f);
}

TEST_CASE("ascii pgm is refused") {
  TempDir tmp;
  const fs::path file = tmp.path / "frame_000.pgm";
  std::ofstream(file) << "P2\n2 2\n255\n0 0 0 0\n";
  CHECK_THROWS_WITH_AS(read_pgm(file), doctest::Contains("binary PGM required"),
                       std::runtime_error);
}

TEST_CASE("maxval other than 255 is refused") {
  TempDir tmp;
  const fs::path file = tmp.path / "frame_000.pgm";
  std::ofstream(file, std::ios::binary) << "P5\n2 2\n127\n"
                                        << std::string(4, '\0');
  CHECK_THROWS_WITH_AS(read_pgm(file), doctest::Contains("maxval"), std::runtime_error);
}

TEST_CASE("header comments are tolerated") {
  TempDir tmp;
  const fs::path file = tmp.path / "c.pgm";
  std::ofstream(file, std::ios::binary) << "P5\n# a comment\n2 2\n255\n"
                                        << std::string(4, '\x10');
  const Field f = read_pgm(file);
  CHECK(f.rows() == 2);
  CHECK(f.cols() == 2);
  CHECK(f(1, 1) == 16.0);
}

TEST_CASE("sequences demand consistent dimensions") {
  TempDir tmp;
  write_pgm(tmp.path / "f0.pgm", Field(8, 10, 1.0));
  write_pgm(tmp.path / "f1.pgm", Field(8, 10, 2.0));
  write_pgm(tmp.path / "f2.pgm", Field(4, 4, 3.0));

  PgmSequence seq(tmp.path);
  REQUIRE(seq.size() == 3);
  CHECK(seq.rows() == 8);
  CHECK(seq.cols() == 10);
  CHECK(seq.next().has_value());
  CHECK(seq.next().has_value());
  CHECK_THROWS_WITH_AS(seq.next(), doctest::Contains("frame 2"), std::runtime_error);
}

TEST_CASE("sequences demand consecutive numbering") {
  TempDir tmp;
  write_pgm(tmp.path / "frame_0.pgm", Field(4, 4, 0.0));
  write_pgm(tmp.path / "frame_1.pgm", Field(4, 4, 0.0));
  write_pgm(tmp.path / "frame_3.pgm", Field(4, 4, 0.0));
  CHECK_THROWS_WITH_AS(PgmSequence(tmp.path), doctest::Contains("missing frame index 2"),
                       std::runtime_error);
}

TEST_CASE("sequence frames arrive in numeric order") {
  TempDir tmp;
  for (int i = 0; i < 12; ++i)
    write_pgm(tmp.path / ("frame_" + std::to_string(i) + ".pgm"), Field(4, 4, double(i)));
  PgmSequence seq(tmp.path);
  for (int i = 0; i < 12; ++i) {
    const auto f = seq.next();
    REQUIRE(f.has_value());
    CHECK(f->index == i);
    CHECK(f->data(0, 0) == double(i));
  }
  CHECK(!seq.next().has_value());
}

TEST_CASE("an empty source is an error") {
  TempDir tmp;
  PgmSequence seq(tmp.path);
  CHECK(seq.size() == 0);
  const Params p = default_params(24, 40);
  auto source = [&seq]() { return seq.next(); };
  CHECK_THROWS_WITH_AS(run_model(source, p, ModelSelect::dsnn), doctest::Contains("empty"),
                       std::runtime_error);
}

TEST_CASE("csv schema, determinism and recomputable summary") {
  const SceneSpec scene = tiny_scene();
  const Params p = default_params(scene.rows, scene.cols);
  const RunReport report = run_model(scene_source(scene), p, ModelSelect::dsnn);

  std::ostringstream csv;
  report.write_csv(csv);
  const std::string text = csv.str();
  CHECK(text.rfind("frame,hs_smp,vs_smp,lp_on_hs,lp_off_hs,lp_on_vs,lp_off_vs,"
                   "hs_spikes,hs_dir,vs_spikes,vs_dir\n",
                   0) == 0);

  // identical rerun gives byte-identical output
  const RunReport again = run_model(scene_source(scene), p, ModelSelect::dsnn);
  std::ostringstream csv2;
  again.write_csv(csv2);
  CHECK(text == csv2.str());

  // summary recomputed from the parsed rows matches exactly
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  RunSummary re;
  while (std::getline(in, line)) {
    ++re.frames;
    std::istringstream row(line);
    std::string tok;
    std::getline(row, tok, ',');  // frame
    std::getline(row, tok, ',');
    const double hs = std::strtod(tok.c_str(), nullptr);
    std::getline(row, tok, ',');
    const double vs = std::strtod(tok.c_str(), nullptr);
    for (int skip = 0; skip < 4; ++skip) std::getline(row, tok, ',');
    std::getline(row, tok, ',');
    const int hs_spikes = std::atoi(tok.c_str());
    std::string hs_dir;
    std::getline(row, hs_dir, ',');
    std::getline(row, tok, ',');
    const int vs_spikes = std::atoi(tok.c_str());
    std::string vs_dir;
    std::getline(row, vs_dir, ',');

    re.peak_abs_hs = std::max(re.peak_abs_hs, std::abs(hs));
    re.peak_abs_vs = std::max(re.peak_abs_vs, std::abs(vs));
    if (hs_dir == "preferred") re.hs_preferred_spikes += hs_spikes;
    if (hs_dir == "null") re.hs_null_spikes += hs_spikes;
    if (vs_dir == "preferred") re.vs_preferred_spikes += vs_spikes;
    if (vs_dir == "null") re.vs_null_spikes += vs_spikes;
    if (std::abs(hs) >= report.t_sp) ++re.hs_frames_above;
    if (std::abs(vs) >= report.t_sp) ++re.vs_frames_above;
  }

  const RunSummary s = report.summary();
  CHECK(re.frames == s.frames);
  CHECK(re.peak_abs_hs == s.peak_abs_hs);
  CHECK(re.peak_abs_vs == s.peak_abs_vs);
  CHECK(re.hs_preferred_spikes == s.hs_preferred_spikes);
  CHECK(re.hs_null_spikes == s.hs_null_spikes);
  CHECK(re.vs_preferred_spikes == s.vs_preferred_spikes);
  CHECK(re.vs_null_spikes == s.vs_null_spikes);
  CHECK(re.hs_frames_above == s.hs_frames_above);
  CHECK(re.vs_frames_above == s.vs_frames_above);
}

TEST_CASE("model column layouts") {
  const SceneSpec scene = tiny_scene();
  const Params p = default_params(scene.rows, scene.cols);

  const RunReport emd = run_model(scene_source(scene), p, ModelSelect::emd);
  CHECK(emd.csv_header() == "frame,emd_hs,emd_vs");

  const RunReport both = run_model(scene_source(scene), p, ModelSelect::both);
  CHECK(both.csv_header() ==
        "frame,hs_smp,vs_smp,lp_on_hs,lp_off_hs,lp_on_vs,lp_off_vs,"
        "hs_spikes,hs_dir,vs_spikes,vs_dir,emd_hs,emd_vs");
  std::ostringstream csv;
  both.write_csv(csv);
  CHECK(csv.str().find(",emd_") != std::string::npos);
}

TEST_CASE("unknown sweep suites list the valid names") {
  const Params p = default_params(180, 540);
  CHECK_THROWS_WITH_AS(run_sweep("xyz", p), doctest::Contains("speed, gray"),
                       std::invalid_argument);
}

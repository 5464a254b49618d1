// Command line front end: scene generation, model runs, sweeps and
// ablation comparisons, with CSV output.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "dsnn/params.hpp"
#include "dsnn/pgm.hpp"
#include "dsnn/pipeline.hpp"
#include "dsnn/report.hpp"
#include "dsnn/stimuli.hpp"

namespace fs = std::filesystem;
using namespace dsnn;

namespace {

struct SourceOpts {
  std::string scene;
  std::string frames_dir;
};

std::string known_scenes() {
  std::string out;
  for (const auto& [name, spec] : scene_library()) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

SceneSpec lookup_scene(const std::string& name) {
  const auto lib = scene_library();
  const auto it = lib.find(name);
  if (it == lib.end())
    throw std::runtime_error("unknown scene '" + name + "'. Known scenes: " + known_scenes());
  return it->second;
}

// Resolves the frame source and its dimensions before any model is built.
struct ResolvedSource {
  FrameSource source;
  int rows = 0;
  int cols = 0;
};

ResolvedSource resolve_source(const SourceOpts& opts) {
  if (opts.scene.empty() == opts.frames_dir.empty())
    throw std::runtime_error("exactly one of --scene or --frames is required");
  if (!opts.scene.empty()) {
    const SceneSpec spec = lookup_scene(opts.scene);
    return {scene_source(spec), spec.rows, spec.cols};
  }
  auto seq = std::make_shared<PgmSequence>(opts.frames_dir);
  if (seq->size() == 0) throw std::runtime_error("empty sequence in '" + opts.frames_dir + "'");
  return {[seq]() { return seq->next(); }, seq->rows(), seq->cols()};
}

Params build_params(int rows, int cols, const std::string& config_path,
                    const std::string& ablation_flag, bool sweep_preset = false) {
  Params p = sweep_preset ? sweep_params(rows, cols) : default_params(rows, cols);
  if (!config_path.empty()) {
    p = load_config_file(p, config_path);
    if (p.rows != rows || p.cols != cols)
      throw std::runtime_error("config rows/cols do not match the frame source (" +
                               std::to_string(cols) + "x" + std::to_string(rows) + ")");
  }
  if (!ablation_flag.empty()) p.ablation = ablation_from_string(ablation_flag);
  return validate(p);
}

void write_file(const fs::path& path, const RunReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  report.write_csv(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directionally selective motion perception network"};
  app.require_subcommand(1);

  SourceOpts src;
  std::string config_path, out_path, model_flag = "dsnn", ablation_flag;

  auto* run_cmd = app.add_subcommand("run", "Process a scene or PGM sequence and emit a CSV");
  run_cmd->add_option("--scene", src.scene, "Named scene from the library");
  run_cmd->add_option("--frames", src.frames_dir, "Directory of numbered binary PGM frames");
  run_cmd->add_option("--config", config_path, "key = value parameter file");
  run_cmd->add_option("--out", out_path, "Output CSV path")->default_val("run.csv");
  run_cmd->add_option("--model", model_flag, "dsnn, emd or both")->default_val("dsnn");
  run_cmd->add_option("--ablation", ablation_flag, "intact, on_blocked or off_blocked");

  std::string suite;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a peak-response sweep suite");
  sweep_cmd->add_option("suite", suite, "speed or gray")->required();
  sweep_cmd->add_option("--config", config_path, "key = value parameter file");
  sweep_cmd->add_option("--out", out_path, "Output CSV path")->default_val("sweep.csv");

  std::string gen_dir;
  auto* gen_cmd = app.add_subcommand("gen", "Export a scene as a numbered PGM sequence");
  gen_cmd->add_option("--scene", src.scene, "Named scene from the library")->required();
  gen_cmd->add_option("--out", gen_dir, "Output directory")->required();

  auto* ablate_cmd =
      app.add_subcommand("ablate", "Run intact, on_blocked and off_blocked back to back");
  ablate_cmd->add_option("--scene", src.scene, "Named scene from the library");
  ablate_cmd->add_option("--frames", src.frames_dir, "Directory of numbered binary PGM frames");
  ablate_cmd->add_option("--config", config_path, "key = value parameter file");
  ablate_cmd->add_option("--out", out_path, "Base CSV path")->default_val("ablate.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const ResolvedSource rs = resolve_source(src);
      const Params p = build_params(rs.rows, rs.cols, config_path, ablation_flag);
      const RunReport report = run_model(rs.source, p, model_from_string(model_flag));
      write_file(out_path, report);
      std::cout << "wrote " << out_path << "\n";
      report.print_summary(std::cout);
    } else if (sweep_cmd->parsed()) {
      const Params p = build_params(180, 540, config_path, "", /*sweep_preset=*/true);
      const auto cells = run_sweep(suite, p);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
      write_sweep_csv(out, suite, cells);
      std::cout << "wrote " << out_path << " (" << cells.size() << " cells)\n";
    } else if (gen_cmd->parsed()) {
      const SceneSpec spec = lookup_scene(src.scene);
      fs::create_directories(gen_dir);
      for (int t = 0; t < spec.duration; ++t) {
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%06d.pgm", t);
        write_pgm(fs::path(gen_dir) / name, render(spec, t).data);
      }
      std::cout << "wrote " << spec.duration << " frames to " << gen_dir << "\n";
    } else if (ablate_cmd->parsed()) {
      fs::path base(out_path);
      const std::string stem = (base.parent_path() / base.stem()).string();
      for (Ablation mode : {Ablation::intact, Ablation::on_blocked, Ablation::off_blocked}) {
        const ResolvedSource rs = resolve_source(src);  // fresh source per pass
        Params p = build_params(rs.rows, rs.cols, config_path, "");
        p.ablation = mode;
        const RunReport report = run_model(rs.source, p, ModelSelect::dsnn);
        const fs::path file = stem + "_" + to_string(mode) + base.extension().string();
        write_file(file, report);
        std::cout << "== " << to_string(mode) << " -> " << file.string() << "\n";
        report.print_summary(std::cout);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

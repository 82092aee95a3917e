// cspacevis: generate planar C-space datasets, render them as radial
// images, compare renders and run the evaluation sweeps.
//
// Exit codes: 0 success, 1 input error, 2 experiment error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cspacevis/config_io.hpp"
#include "cspacevis/dataset_io.hpp"
#include "cspacevis/errors.hpp"
#include "cspacevis/experiment.hpp"
#include "cspacevis/image_codec.hpp"
#include "cspacevis/image_metrics.hpp"
#include "cspacevis/planar.hpp"
#include "cspacevis/render.hpp"
#include "cspacevis/rng.hpp"

namespace fs = std::filesystem;
using namespace cspacevis;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitExperiment = 2;

struct GenerateArgs {
  std::size_t joints = 2;
  std::size_t samples = 10000;
  std::size_t obstacles = 3;
  std::string mode = "free";
  std::uint64_t seed = 1;
  double reach = 2.0;
  double half_width = 0.02;
  std::vector<double> bounds{-2.0, -2.0, 2.0, 2.0};
  std::vector<double> radius_range{0.1, 0.4};
  std::string scene;
  std::string out_dir = ".";
  bool csv = false;
};

struct RenderArgs {
  std::string dataset;
  std::string config;
  std::optional<int> nd;
  std::optional<int> canvas;
  std::optional<double> epsilon;
  std::string plot;
  std::string format = "ppm";
  std::string out;
  std::string out_dir = ".";
};

struct CompareArgs {
  std::string a;
  std::string b;
  bool crop_legend = false;
  int legend_px = 80;
  std::string out_dir = ".";
  std::string format = "ppm";
};

struct ExperimentArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> nd;
  std::optional<int> canvas;
  std::string out_dir;
  std::string format = "ppm";
  bool save_images = false;
  bool crop_legend = false;
  bool nd_sweep = false;
};

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create directory " + dir + ": " + ec.message());
}

int run_generate(const GenerateArgs& a) {
  Scene scene;
  if (!a.scene.empty()) {
    scene = scene_from_json(read_text_file(a.scene));
  } else {
    if (a.bounds.size() != 4) throw InputError("--bounds takes x0 y0 x1 y1");
    if (a.radius_range.size() != 2) throw InputError("--radius-range takes lo hi");
    if (a.joints == 0) throw InputError("--joints must be positive");
    ExperimentConfig cfg;
    cfg.n_joints = a.joints;
    cfg.seed = a.seed;
    cfg.reach = a.reach;
    cfg.half_width = a.half_width;
    cfg.obstacles = {a.obstacles, Box{{a.bounds[0], a.bounds[1]}, {a.bounds[2], a.bounds[3]}},
                     RadiusRange{a.radius_range[0], a.radius_range[1]}};
    scene.robot = experiment_robot(cfg);
    scene.workspace = experiment_workspace(cfg, scene.robot, 0);
  }
  SampleMode mode;
  if (a.mode == "free") {
    mode = SampleMode::FreeOnly;
  } else if (a.mode == "all") {
    mode = SampleMode::All;
  } else {
    throw InputError("--mode must be free or all");
  }
  const Dataset ds = sample_cspace(scene.robot, scene.workspace, a.samples, a.seed, mode);
  ensure_dir(a.out_dir);
  write_text_file(fs::path(a.out_dir) / "scene.json", scene_to_json(scene));
  save_dataset(ds, fs::path(a.out_dir) / "dataset.json");
  if (a.csv) save_dataset(ds, fs::path(a.out_dir) / "dataset.csv");
  std::cout << "wrote " << ds.size() << " samples (" << count_label(ds, Label::Collision)
            << " in collision) to " << a.out_dir << "\n";
  return kExitOk;
}

RenderConfig load_render_config(const std::string& path) {
  return path.empty() ? RenderConfig{} : render_config_from_json(read_text_file(path));
}

int run_render(const RenderArgs& a) {
  RenderConfig cfg = load_render_config(a.config);
  if (a.nd) cfg.disc.n_d = *a.nd;
  if (a.canvas) cfg.canvas_px = *a.canvas;
  if (a.epsilon) cfg.pert.epsilon_max = *a.epsilon;
  if (!a.plot.empty()) cfg.policy = parse_plot_policy(a.plot);
  const ImageFormat format = parse_image_format(a.format);

  const Dataset ds = load_dataset(a.dataset);
  const RasterImage img = render(ds, cfg);
  fs::path out = a.out;
  if (out.empty()) {
    ensure_dir(a.out_dir);
    out = fs::path(a.out_dir) / (fs::path(a.dataset).stem().string() + extension_for(format));
  }
  save_image(img, out, format);
  std::cout << "wrote " << img.width << "x" << img.height << " image to " << out.string() << "\n";
  return kExitOk;
}

std::pair<RasterImage, RasterImage> load_pair(const CompareArgs& a) {
  RasterImage ia = load_image(a.a);
  RasterImage ib = load_image(a.b);
  if (a.crop_legend) {
    ia = crop_bottom(ia, a.legend_px);
    ib = crop_bottom(ib, a.legend_px);
  }
  return {std::move(ia), std::move(ib)};
}

nlohmann::json stats_json(const RasterImage& a, const RasterImage& b) {
  const DiffStats s = setminus_stats(a, b);
  return {{"schema_version", kReportSchemaVersion},
          {"nonwhite_before", s.nonwhite_before},
          {"nonwhite_after", s.nonwhite_after},
          {"mismatch_ratio", s.mismatch_ratio},
          {"mse", mse(a, b)}};
}

int run_diff(const CompareArgs& a) {
  const auto [ia, ib] = load_pair(a);
  const ImageFormat format = parse_image_format(a.format);
  const auto setminus = pixel_setminus(ia, ib);
  ensure_dir(a.out_dir);
  const fs::path dir(a.out_dir);
  save_image(negative_subtraction(ia, ib), dir / (std::string("negative_diff") + extension_for(format)), format);
  save_image(setminus.image, dir / (std::string("setminus") + extension_for(format)), format);
  const std::string stats = stats_json(ia, ib).dump(2) + "\n";
  write_text_file(dir / "stats.json", stats);
  std::cout << stats;
  return kExitOk;
}

int run_metrics(const CompareArgs& a) {
  const auto [ia, ib] = load_pair(a);
  std::cout << stats_json(ia, ib).dump(2) << "\n";
  return kExitOk;
}

ExperimentConfig load_experiment_config(const ExperimentArgs& a) {
  ExperimentConfig cfg =
      a.config.empty() ? ExperimentConfig{} : experiment_config_from_json(read_text_file(a.config));
  if (a.seed) cfg.seed = *a.seed;
  if (a.nd) cfg.render.disc.n_d = *a.nd;
  if (a.canvas) cfg.render.canvas_px = *a.canvas;
  if (a.crop_legend) cfg.render.crop_legend = true;
  if (a.nd_sweep) cfg.nd_sweep = {100, 250, 500, 1000};
  validate(cfg);
  return cfg;
}

ImageSink image_sink(const ExperimentArgs& a, const char* prefix) {
  if (!a.save_images || a.out_dir.empty()) return {};
  const ImageFormat format = parse_image_format(a.format);
  const fs::path dir = fs::path(a.out_dir) / "images";
  ensure_dir(dir.string());
  return [dir, format, prefix](std::size_t w, double fraction, const RasterImage& img) {
    char name[64];
    std::snprintf(name, sizeof name, "%s_ws%03zu_f%03d%s", prefix, w,
                  static_cast<int>(fraction * 100.0 + 0.5), extension_for(format));
    save_image(img, dir / name, format);
  };
}

void emit_report(const ExperimentArgs& a, const std::string& json) {
  if (a.out_dir.empty()) {
    std::cout << json;
    return;
  }
  ensure_dir(a.out_dir);
  write_text_file(fs::path(a.out_dir) / "report.json", json);
}

int run_exp_accuracy(const ExperimentArgs& a) {
  const ExperimentConfig cfg = load_experiment_config(a);
  const AccuracyReport report = run_accuracy_experiment(cfg, image_sink(a, "accuracy"));
  emit_report(a, to_json(report));
  if (report.correlation) {
    std::fprintf(stderr, "fisher-z mean r = %.4f +/- %.4f over %zu workspaces\n",
                 report.correlation->r_mean, report.correlation->se,
                 report.correlation->n_groups);
  }
  if (report.degenerate) {
    std::fprintf(stderr, "degenerate experiment: %s\n", report.note.c_str());
    return kExitExperiment;
  }
  return kExitOk;
}

int run_exp_subset(const ExperimentArgs& a) {
  const ExperimentConfig cfg = load_experiment_config(a);
  const SubsetReport report = run_subset_experiment(cfg, image_sink(a, "subset"));
  emit_report(a, to_json(report));
  for (const auto& row : report.table) {
    std::fprintf(stderr, "%3.0f%%  mse %.4f +/- %.4f\n", row.fraction * 100.0, row.mse.mean,
                 row.mse.sd);
  }
  return kExitOk;
}

void add_experiment_options(CLI::App* cmd, ExperimentArgs& a) {
  cmd->add_option("--config", a.config, "experiment config JSON")->check(CLI::ExistingFile);
  cmd->add_option("--seed", a.seed, "master seed (overrides the config)");
  cmd->add_option("--nd", a.nd, "number of bins over [-pi, pi]");
  cmd->add_option("--canvas", a.canvas, "canvas side in pixels");
  cmd->add_option("--out-dir", a.out_dir, "write report.json (and images) here");
  cmd->add_option("--format", a.format, "image format for --save-images: ppm or png");
  cmd->add_flag("--save-images", a.save_images, "write every render under out-dir/images");
  cmd->add_flag("--crop-legend", a.crop_legend, "exclude the legend strip from metrics");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial visualization and comparison of robot configuration spaces"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "sample a planar C-space dataset");
  generate->add_option("--joints", gen.joints, "number of links");
  generate->add_option("--samples", gen.samples, "number of samples m");
  generate->add_option("--obstacles", gen.obstacles, "number of circle obstacles");
  generate->add_option("--mode", gen.mode, "free (collision-free only) or all");
  generate->add_option("--seed", gen.seed, "seed for the workspace and the samples");
  generate->add_option("--reach", gen.reach, "total arm length");
  generate->add_option("--half-width", gen.half_width, "link capsule radius");
  generate->add_option("--bounds", gen.bounds, "obstacle center box: x0 y0 x1 y1")->expected(4);
  generate->add_option("--radius-range", gen.radius_range, "obstacle radius range: lo hi")
      ->expected(2);
  generate->add_option("--scene", gen.scene, "scene JSON instead of a random workspace")
      ->check(CLI::ExistingFile);
  generate->add_option("--out-dir", gen.out_dir, "output directory");
  generate->add_flag("--csv", gen.csv, "also write dataset.csv");

  RenderArgs ren;
  auto* render_cmd = app.add_subcommand("render", "render a dataset (.json or .csv)");
  render_cmd->add_option("dataset", ren.dataset, "dataset file")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--config", ren.config, "render config JSON")->check(CLI::ExistingFile);
  render_cmd->add_option("--nd", ren.nd, "number of bins over [-pi, pi]");
  render_cmd->add_option("--canvas", ren.canvas, "canvas side in pixels");
  render_cmd->add_option("--epsilon", ren.epsilon, "perturbation bound epsilon_max (radians)");
  render_cmd->add_option("--plot", ren.plot, "free, all or gray");
  render_cmd->add_option("--format", ren.format, "ppm or png");
  render_cmd->add_option("--out", ren.out, "output file");
  render_cmd->add_option("--out-dir", ren.out_dir, "output directory when --out is not given");

  CompareArgs dif;
  auto* diff = app.add_subcommand("diff", "negative difference image, A \\ B and stats JSON");
  diff->add_option("a", dif.a, "image A (.ppm or .png)")->required()->check(CLI::ExistingFile);
  diff->add_option("b", dif.b, "image B (.ppm or .png)")->required()->check(CLI::ExistingFile);
  diff->add_option("--out-dir", dif.out_dir, "output directory");
  diff->add_option("--format", dif.format, "ppm or png");
  diff->add_flag("--crop-legend", dif.crop_legend, "exclude the legend strip");
  diff->add_option("--legend-px", dif.legend_px, "legend strip height");

  CompareArgs met;
  auto* metrics = app.add_subcommand("metrics", "mismatch ratio and MSE of two images");
  metrics->add_option("a", met.a, "image A")->required()->check(CLI::ExistingFile);
  metrics->add_option("b", met.b, "image B")->required()->check(CLI::ExistingFile);
  metrics->add_flag("--crop-legend", met.crop_legend, "exclude the legend strip");
  metrics->add_option("--legend-px", met.legend_px, "legend strip height");

  ExperimentArgs acc;
  auto* exp_acc = app.add_subcommand("exp-accuracy", "collision-injection correlation sweep");
  add_experiment_options(exp_acc, acc);
  exp_acc->add_flag("--nd-sweep", acc.nd_sweep, "also sweep n_d over 100, 250, 500, 1000");

  ExperimentArgs sub;
  auto* exp_sub = app.add_subcommand("exp-subset", "subset MSE sweep");
  add_experiment_options(exp_sub, sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (render_cmd->parsed()) return run_render(ren);
    if (diff->parsed()) return run_diff(dif);
    if (metrics->parsed()) return run_metrics(met);
    if (exp_acc->parsed()) return run_exp_accuracy(acc);
    if (exp_sub->parsed()) return run_exp_subset(sub);
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const ExperimentError& e) {
    std::fprintf(stderr, "experiment error: %s\n", e.what());
    return kExitExperiment;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitInput;
}

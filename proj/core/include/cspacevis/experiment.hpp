#pragma once

// Evaluation pipelines: collision-state injection with a correlation
// between collision-checker accuracy and visualization accuracy, and the
// subset sweep measuring per-pixel MSE against the full render.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cspacevis/config_io.hpp"
#include "cspacevis/dataset.hpp"
#include "cspacevis/image_metrics.hpp"
#include "cspacevis/planar.hpp"
#include "cspacevis/raster.hpp"
#include "cspacevis/stats.hpp"

namespace cspacevis {

inline constexpr int kReportSchemaVersion = 1;

struct ObstacleSpec {
  std::size_t k = 4;
  Box bounds{{-1.5, -1.5}, {1.5, 1.5}};
  RadiusRange radius_range{0.1, 0.4};
};

struct ExperimentConfig {
  std::size_t n_joints = 7;
  std::size_t m = 10000;
  std::size_t n_workspaces = 10;
  std::uint64_t seed = 1;
  std::vector<double> fractions;  // empty: the pipeline's default sweep
  double reach = 2.0;             // total arm length, split evenly over the links
  double half_width = 0.02;
  ObstacleSpec obstacles;
  RenderConfig render;  // render.disc.n_d is the experiment's n_d
  // Discretization sweep for the accuracy pipeline: mismatch ratio of a
  // single injected fraction re-rendered at each n_d.
  std::vector<int> nd_sweep;
  double sweep_fraction = 0.1;
};

std::vector<double> default_accuracy_fractions();  // 0.1, 0.2, ..., 1.0
std::vector<double> default_subset_fractions();    // 0.9, 0.8, ..., 0.1

void validate(const ExperimentConfig& cfg);
PlanarRobot experiment_robot(const ExperimentConfig& cfg);

// Workspace w of the experiment. Scenes whose obstacles swallow the robot
// base (every state collides) are redrawn with the next derived seed.
Workspace experiment_workspace(const ExperimentConfig& cfg, const PlanarRobot& robot,
                               std::size_t w);

// Replaces ceil(fraction * m) samples at seeded-random positions with
// rejection-sampled colliding configurations labeled Collision.
// Throws SamplingTimeout after 1000 * m fruitless draws.
Dataset inject_collision_states(const Dataset& ds, double fraction, const PlanarRobot& robot,
                                const Workspace& ws, std::uint64_t seed);

// Number of samples inject_collision_states replaces.
std::size_t injected_count(std::size_t m, double fraction);

// Free labels / m.
double checker_accuracy(const Dataset& ds);

// 1 - mismatch_ratio of perturbed \ reference: 1 when the perturbed render
// adds nothing the reference lacks, 0 when it shares no pixel.
double visualization_accuracy(const RasterImage& perturbed, const RasterImage& reference,
                              RGB8 white = kWhite);

struct AccuracyRecord {
  std::size_t workspace = 0;
  double fraction = 0.0;
  double checker_accuracy = 0.0;
  double visualization_accuracy = 0.0;
  DiffStats diff;
};

struct WorkspaceOutcome {
  std::size_t index = 0;
  std::string workspace_id;
  std::uint64_t dataset_seed = 0;
  bool ok = true;
  std::string error;          // why the workspace was skipped
  std::optional<double> r;    // accuracy pipeline only
  std::string r_error;        // pearson failure code, if any
};

struct SweepRecord {
  int n_d = 0;
  std::vector<double> mismatch_ratios;  // one per successful workspace
  MeanSd summary;
};

struct AccuracyReport {
  ExperimentConfig config;
  std::vector<WorkspaceOutcome> workspaces;
  std::vector<AccuracyRecord> records;
  std::optional<CorrelationSummary> correlation;
  bool degenerate = false;
  std::string note;
  std::vector<SweepRecord> sweep;
};

struct SubsetRecord {
  std::size_t workspace = 0;
  double fraction = 0.0;
  double mse = 0.0;
};

struct SubsetRow {
  double fraction = 0.0;
  MeanSd mse;
};

struct SubsetReport {
  ExperimentConfig config;
  std::vector<WorkspaceOutcome> workspaces;
  std::vector<SubsetRecord> records;
  std::vector<SubsetRow> table;  // fractions in config order
};

// Called with (workspace, fraction, image) for every render when set;
// fraction is 0 for the reference.
using ImageSink = std::function<void(std::size_t, double, const RasterImage&)>;

AccuracyReport run_accuracy_experiment(const ExperimentConfig& cfg, const ImageSink& sink = {});
SubsetReport run_subset_experiment(const ExperimentConfig& cfg, const ImageSink& sink = {});

std::string to_json(const AccuracyReport& report);
std::string to_json(const SubsetReport& report);

// FNV-1a over the canonical JSON form of the config.
std::uint64_t config_hash(const ExperimentConfig& cfg);

std::string experiment_config_to_json(const ExperimentConfig& cfg);
ExperimentConfig experiment_config_from_json(std::string_view text);

}  // namespace cspacevis

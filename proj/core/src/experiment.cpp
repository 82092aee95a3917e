#include "cspacevis/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "cspacevis/cspace.hpp"
#include "cspacevis/errors.hpp"
#include "cspacevis/render.hpp"
#include "cspacevis/rng.hpp"
#include "json_detail.hpp"

namespace cspacevis {

namespace {

using detail::json;

// Seed streams derived from the master seed.
enum class Stream : std::uint64_t { Workspace = 1, Dataset = 2, Inject = 3, Subset = 4, Sweep = 5 };

std::uint64_t stream_seed(std::uint64_t base, Stream kind, std::uint64_t index) {
  return mix_seed(mix_seed(base, static_cast<std::uint64_t>(kind)), index);
}

constexpr std::size_t kWorkspaceRedraws = 1000;

std::vector<double> fractions_or(const std::vector<double>& given, std::vector<double> fallback) {
  return given.empty() ? fallback : given;
}

RasterImage render_cropped(const Dataset& ds, const RenderConfig& cfg, int crop_rows) {
  RasterImage img = render(ds, cfg);
  return crop_rows > 0 ? crop_bottom(img, crop_rows) : img;
}

RGB8 background_of(const RenderConfig& cfg) { return cfg.background.value_or(kWhite); }

json outcome_to_json(const WorkspaceOutcome& o) {
  json j;
  j["index"] = o.index;
  j["workspace_id"] = o.workspace_id;
  j["dataset_seed"] = o.dataset_seed;
  j["status"] = o.ok ? "ok" : "skipped";
  if (!o.ok) j["error"] = o.error;
  if (o.r) j["r"] = *o.r;
  if (!o.r_error.empty()) j["r_error"] = o.r_error;
  return j;
}

json provenance(const ExperimentConfig& cfg) {
  char hash[19];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(config_hash(cfg)));
  return {{"seed", cfg.seed}, {"config_hash", hash}};
}

json config_object(const ExperimentConfig& cfg) {
  json j;
  j["n_joints"] = cfg.n_joints;
  j["m"] = cfg.m;
  j["n_workspaces"] = cfg.n_workspaces;
  j["n_d"] = cfg.render.disc.n_d;
  j["seed"] = cfg.seed;
  j["fractions"] = cfg.fractions;
  j["reach"] = cfg.reach;
  j["half_width"] = cfg.half_width;
  j["obstacles"] = {
      {"k", cfg.obstacles.k},
      {"bounds", json::array({json::array({cfg.obstacles.bounds.lo.x, cfg.obstacles.bounds.lo.y}),
                              json::array({cfg.obstacles.bounds.hi.x, cfg.obstacles.bounds.hi.y})})},
      {"radius_range", json::array({cfg.obstacles.radius_range.lo, cfg.obstacles.radius_range.hi})}};
  j["render"] = detail::render_config_to_object(cfg.render);
  j["nd_sweep"] = cfg.nd_sweep;
  j["sweep_fraction"] = cfg.sweep_fraction;
  return j;
}

}  // namespace

std::vector<double> default_accuracy_fractions() {
  std::vector<double> f;
  for (int k = 1; k <= 10; ++k) f.push_back(k / 10.0);
  return f;
}

std::vector<double> default_subset_fractions() {
  std::vector<double> f;
  for (int k = 9; k >= 1; --k) f.push_back(k / 10.0);
  return f;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n_joints < 2) throw InputError("experiments need at least two joints");
  if (cfg.m == 0) throw InputError("m must be positive");
  if (cfg.n_workspaces == 0) throw InputError("n_workspaces must be at least 1");
  for (double f : cfg.fractions) {
    if (!(f > 0.0 && f <= 1.0)) throw InputError("fractions must lie in (0, 1]");
  }
  if (!(cfg.reach > 0.0)) throw InputError("reach must be positive");
  if (!(cfg.half_width >= 0.0)) throw InputError("half_width must be non-negative");
  const auto& b = cfg.obstacles.bounds;
  if (b.lo.x > b.hi.x || b.lo.y > b.hi.y) throw InputError("obstacle bounds are empty");
  const auto& rr = cfg.obstacles.radius_range;
  if (!(rr.lo > 0.0) || rr.lo > rr.hi) throw InputError("radius range must satisfy 0 < lo <= hi");
  for (int nd : cfg.nd_sweep) {
    if (nd < 1) throw InputError("nd_sweep entries must be at least 1");
  }
  if (!(cfg.sweep_fraction > 0.0 && cfg.sweep_fraction <= 1.0)) {
    throw InputError("sweep_fraction must lie in (0, 1]");
  }
  validate(cfg.render.disc);
  validate(cfg.render.colormap);
}

PlanarRobot experiment_robot(const ExperimentConfig& cfg) {
  return make_uniform_robot(cfg.n_joints, cfg.reach / static_cast<double>(cfg.n_joints),
                            cfg.half_width);
}

Workspace experiment_workspace(const ExperimentConfig& cfg, const PlanarRobot& robot,
                               std::size_t w) {
  const std::uint64_t base = stream_seed(cfg.seed, Stream::Workspace, w);
  const double base_clearance = robot.links.front().half_width;
  for (std::size_t attempt = 0; attempt < kWorkspaceRedraws; ++attempt) {
    Workspace ws = random_workspace(mix_seed(base, attempt), cfg.obstacles.k, cfg.obstacles.bounds,
                                    cfg.obstacles.radius_range);
    bool swallows_base = false;
    for (const auto& o : ws.obstacles) {
      if (norm(o.center - robot.base) < o.radius + base_clearance) swallows_base = true;
    }
    if (!swallows_base) return ws;
  }
  throw ExperimentError("no workspace without an obstacle on the robot base after " +
                        std::to_string(kWorkspaceRedraws) + " draws");
}

std::size_t injected_count(std::size_t m, double fraction) {
  const double c = std::ceil(fraction * static_cast<double>(m) - 1e-9);
  return c <= 0.0 ? 0 : std::min(m, static_cast<std::size_t>(c));
}

Dataset inject_collision_states(const Dataset& ds, double fraction, const PlanarRobot& robot,
                                const Workspace& ws, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InputError("injection fraction must lie in (0, 1]");
  }
  if (ds.n_joints != robot.dof()) throw InputError("dataset and robot joint counts differ");
  Dataset out = ds;
  const std::size_t count = injected_count(ds.size(), fraction);
  if (count == 0) return out;

  const auto positions = choose_indices(ds.size(), count, mix_seed(seed, 0));
  Rng rng(mix_seed(seed, 1));
  const std::size_t budget = kRejectionBudgetPerSample * ds.size();
  std::size_t attempts = 0;
  for (std::size_t pos : positions) {
    while (true) {
      if (attempts++ == budget) {
        throw SamplingTimeout("no colliding state found within " + std::to_string(budget) +
                              " draws");
      }
      Configuration q = uniform_configuration(robot.dof(), rng);
      if (in_collision(robot, ws, q)) {
        out.samples[pos] = std::move(q);
        out.labels[pos] = Label::Collision;
        break;
      }
    }
  }
  return out;
}

double checker_accuracy(const Dataset& ds) {
  if (ds.empty()) throw InputError("checker accuracy of an empty dataset");
  return static_cast<double>(count_label(ds, Label::Free)) / static_cast<double>(ds.size());
}

double visualization_accuracy(const RasterImage& perturbed, const RasterImage& reference,
                              RGB8 white) {
  return 1.0 - setminus_stats(perturbed, reference, white).mismatch_ratio;
}

AccuracyReport run_accuracy_experiment(const ExperimentConfig& cfg, const ImageSink& sink) {
  validate(cfg);
  AccuracyReport report;
  report.config = cfg;
  report.config.fractions = fractions_or(cfg.fractions, default_accuracy_fractions());
  const auto& fractions = report.config.fractions;

  const PlanarRobot robot = experiment_robot(cfg);
  const int crop = metric_crop_rows(cfg.render, cfg.n_joints);
  const RGB8 white = background_of(cfg.render);
  RenderConfig reference_cfg = cfg.render;
  reference_cfg.policy = PlotPolicy::FreeOnly;
  // A perturbed sampler's output is drawn as-is; its collision states are
  // what the set difference against the reference picks up.
  RenderConfig perturbed_cfg = cfg.render;
  perturbed_cfg.policy = PlotPolicy::All;

  for (int nd : cfg.nd_sweep) report.sweep.push_back(SweepRecord{nd, {}, {}});

  std::vector<double> rs;
  for (std::size_t w = 0; w < cfg.n_workspaces; ++w) {
    WorkspaceOutcome outcome;
    outcome.index = w;
    outcome.dataset_seed = stream_seed(cfg.seed, Stream::Dataset, w);
    std::vector<AccuracyRecord> records;
    std::vector<double> sweep_ratios;
    try {
      const Workspace ws = experiment_workspace(cfg, robot, w);
      outcome.workspace_id = ws.id;
      const Dataset ds = sample_cspace(robot, ws, cfg.m, outcome.dataset_seed, SampleMode::FreeOnly);
      const RasterImage reference = render_cropped(ds, reference_cfg, crop);
      if (sink) sink(w, 0.0, reference);

      std::vector<double> checker;
      std::vector<double> visual;
      for (std::size_t fi = 0; fi < fractions.size(); ++fi) {
        const Dataset injected = inject_collision_states(
            ds, fractions[fi], robot, ws, stream_seed(outcome.dataset_seed, Stream::Inject, fi));
        const RasterImage img = render_cropped(injected, perturbed_cfg, crop);
        if (sink) sink(w, fractions[fi], img);
        AccuracyRecord rec;
        rec.workspace = w;
        rec.fraction = fractions[fi];
        rec.checker_accuracy = checker_accuracy(injected);
        rec.diff = setminus_stats(img, reference, white);
        rec.visualization_accuracy = 1.0 - rec.diff.mismatch_ratio;
        checker.push_back(rec.checker_accuracy);
        visual.push_back(rec.visualization_accuracy);
        records.push_back(rec);
      }
      try {
        outcome.r = pearson(checker, visual);
      } catch (const StatsError& e) {
        outcome.r_error = to_string(e.code());
      }

      if (!cfg.nd_sweep.empty()) {
        const Dataset injected =
            inject_collision_states(ds, cfg.sweep_fraction, robot, ws,
                                    stream_seed(outcome.dataset_seed, Stream::Sweep, 0));
        for (int nd : cfg.nd_sweep) {
          RenderConfig ref_nd = reference_cfg;
          RenderConfig pert_nd = perturbed_cfg;
          ref_nd.disc.n_d = pert_nd.disc.n_d = nd;
          const int crop_nd = metric_crop_rows(ref_nd, cfg.n_joints);
          const RasterImage a = render_cropped(injected, pert_nd, crop_nd);
          const RasterImage b = render_cropped(ds, ref_nd, crop_nd);
          sweep_ratios.push_back(setminus_stats(a, b, white).mismatch_ratio);
        }
      }
    } catch (const ExperimentError& e) {
      outcome.ok = false;
      outcome.error = e.what();
      outcome.r.reset();
    }
    if (outcome.ok) {
      report.records.insert(report.records.end(), records.begin(), records.end());
      if (outcome.r) rs.push_back(*outcome.r);
      for (std::size_t s = 0; s < sweep_ratios.size(); ++s) {
        report.sweep[s].mismatch_ratios.push_back(sweep_ratios[s]);
      }
    }
    report.workspaces.push_back(std::move(outcome));
  }

  for (auto& s : report.sweep) s.summary = mean_sd(s.mismatch_ratios);

  if (rs.empty()) {
    report.degenerate = true;
    report.note = "no workspace produced a correlation; at least 3 distinct fractions are needed";
  } else {
    try {
      report.correlation = fisher_z_mean(rs);
    } catch (const StatsError& e) {
      report.degenerate = true;
      report.note = std::string("fisher-z averaging failed: ") + to_string(e.code());
    }
  }
  return report;
}

SubsetReport run_subset_experiment(const ExperimentConfig& cfg, const ImageSink& sink) {
  validate(cfg);
  SubsetReport report;
  report.config = cfg;
  report.config.fractions = fractions_or(cfg.fractions, default_subset_fractions());
  const auto& fractions = report.config.fractions;

  const PlanarRobot robot = experiment_robot(cfg);
  const int crop = metric_crop_rows(cfg.render, cfg.n_joints);
  std::vector<std::vector<double>> per_fraction(fractions.size());

  for (std::size_t w = 0; w < cfg.n_workspaces; ++w) {
    WorkspaceOutcome outcome;
    outcome.index = w;
    outcome.dataset_seed = stream_seed(cfg.seed, Stream::Dataset, w);
    std::vector<SubsetRecord> records;
    try {
      const Workspace ws = experiment_workspace(cfg, robot, w);
      outcome.workspace_id = ws.id;
      const Dataset ds = sample_cspace(robot, ws, cfg.m, outcome.dataset_seed, SampleMode::FreeOnly);
      const RasterImage full = render_cropped(ds, cfg.render, crop);
      if (sink) sink(w, 0.0, full);
      for (std::size_t fi = 0; fi < fractions.size(); ++fi) {
        const Dataset sub =
            subsample(ds, fractions[fi], stream_seed(outcome.dataset_seed, Stream::Subset, fi));
        if (sub.empty()) {
          throw ExperimentError("fraction " + std::to_string(fractions[fi]) +
                                " leaves no samples");
        }
        const RasterImage img = render_cropped(sub, cfg.render, crop);
        if (sink) sink(w, fractions[fi], img);
        records.push_back({w, fractions[fi], mse(img, full)});
      }
    } catch (const ExperimentError& e) {
      outcome.ok = false;
      outcome.error = e.what();
    }
    if (outcome.ok) {
      for (std::size_t fi = 0; fi < records.size(); ++fi) per_fraction[fi].push_back(records[fi].mse);
      report.records.insert(report.records.end(), records.begin(), records.end());
    }
    report.workspaces.push_back(std::move(outcome));
  }

  for (std::size_t fi = 0; fi < fractions.size(); ++fi) {
    report.table.push_back({fractions[fi], mean_sd(per_fraction[fi])});
  }
  return report;
}

std::string to_json(const AccuracyReport& report) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "accuracy";
  j["config"] = config_object(report.config);
  j["provenance"] = provenance(report.config);
  j["sign_convention"] =
      "r = pearson(checker_accuracy, visualization_accuracy), "
      "visualization_accuracy = 1 - mismatch_ratio";
  json ws = json::array();
  for (const auto& o : report.workspaces) ws.push_back(outcome_to_json(o));
  j["workspaces"] = std::move(ws);
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"workspace", r.workspace},
                       {"fraction", r.fraction},
                       {"checker_accuracy", r.checker_accuracy},
                       {"visualization_accuracy", r.visualization_accuracy},
                       {"mismatch_ratio", r.diff.mismatch_ratio},
                       {"nonwhite_before", r.diff.nonwhite_before},
                       {"nonwhite_after", r.diff.nonwhite_after}});
  }
  j["records"] = std::move(records);
  if (report.correlation) {
    j["correlation"] = {{"r_mean", report.correlation->r_mean},
                        {"se", report.correlation->se},
                        {"n_groups", report.correlation->n_groups}};
  } else {
    j["correlation"] = nullptr;
  }
  j["degenerate"] = report.degenerate;
  if (!report.note.empty()) j["note"] = report.note;
  if (!report.sweep.empty()) {
    json sweep = json::array();
    for (const auto& s : report.sweep) {
      sweep.push_back({{"n_d", s.n_d},
                       {"fraction", report.config.sweep_fraction},
                       {"mismatch_ratios", s.mismatch_ratios},
                       {"mean", s.summary.mean},
                       {"sd", s.summary.sd}});
    }
    j["discretization_sweep"] = std::move(sweep);
  }
  return j.dump(2) + "\n";
}

std::string to_json(const SubsetReport& report) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "subset";
  j["config"] = config_object(report.config);
  j["provenance"] = provenance(report.config);
  json ws = json::array();
  for (const auto& o : report.workspaces) ws.push_back(outcome_to_json(o));
  j["workspaces"] = std::move(ws);
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"workspace", r.workspace}, {"fraction", r.fraction}, {"mse", r.mse}});
  }
  j["records"] = std::move(records);
  json table = json::array();
  for (const auto& row : report.table) {
    table.push_back({{"fraction", row.fraction}, {"mse_mean", row.mse.mean}, {"mse_sd", row.mse.sd}});
  }
  j["table"] = std::move(table);
  return j.dump(2) + "\n";
}

std::string experiment_config_to_json(const ExperimentConfig& cfg) {
  return config_object(cfg).dump(2) + "\n";
}

std::uint64_t config_hash(const ExperimentConfig& cfg) {
  const std::string text = config_object(cfg).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ExperimentConfig experiment_config_from_json(std::string_view text) {
  const json j = detail::parse_json(text, "experiment config");
  detail::reject_unknown_keys(j,
                              {"n_joints", "m", "n_workspaces", "n_d", "seed", "fractions",
                               "reach", "half_width", "obstacles", "render", "nd_sweep",
                               "sweep_fraction"},
                              "experiment config");
  ExperimentConfig cfg;
  try {
    if (j.contains("render")) cfg.render = detail::render_config_from_object(j.at("render"));
    cfg.n_joints = j.value("n_joints", cfg.n_joints);
    cfg.m = j.value("m", cfg.m);
    cfg.n_workspaces = j.value("n_workspaces", cfg.n_workspaces);
    cfg.render.disc.n_d = j.value("n_d", cfg.render.disc.n_d);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.fractions = j.value("fractions", cfg.fractions);
    cfg.reach = j.value("reach", cfg.reach);
    cfg.half_width = j.value("half_width", cfg.half_width);
    cfg.nd_sweep = j.value("nd_sweep", cfg.nd_sweep);
    cfg.sweep_fraction = j.value("sweep_fraction", cfg.sweep_fraction);
    if (j.contains("obstacles")) {
      const auto& o = j.at("obstacles");
      detail::reject_unknown_keys(o, {"k", "bounds", "radius_range"}, "obstacles");
      cfg.obstacles.k = o.value("k", cfg.obstacles.k);
      if (o.contains("bounds")) {
        const auto b = o.at("bounds").get<std::vector<std::vector<double>>>();
        if (b.size() != 2 || b[0].size() != 2 || b[1].size() != 2) {
          throw InputError("obstacles.bounds must be [[x0, y0], [x1, y1]]");
        }
        cfg.obstacles.bounds = {{b[0][0], b[0][1]}, {b[1][0], b[1][1]}};
      }
      if (o.contains("radius_range")) {
        const auto r = o.at("radius_range").get<std::vector<double>>();
        if (r.size() != 2) throw InputError("obstacles.radius_range must be [lo, hi]");
        cfg.obstacles.radius_range = {r[0], r[1]};
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("experiment config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

}  // namespace cspacevis

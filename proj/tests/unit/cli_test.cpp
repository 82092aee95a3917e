#include <gtest/gtest.h>

#include <string>

#include "cli_runner.hpp"
#include "cspacevis/dataset_io.hpp"

using clirun::run;
using clirun::scratch;
using clirun::slurp;

namespace {

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST(Cli, GenerateRenderIsByteStable) {
  const auto dir = scratch("cli_stable");
  ASSERT_EQ(run("generate --joints 3 --samples 800 --seed 5 --out-dir " + q(dir / "g")), 0);
  const auto ds = dir / "g" / "dataset.json";
  ASSERT_EQ(run("render " + q(ds) + " --nd 60 --out " + q(dir / "a.ppm")), 0);
  ASSERT_EQ(run("render " + q(ds) + " --nd 60 --out " + q(dir / "b.ppm")), 0);
  EXPECT_EQ(slurp(dir / "a.ppm"), slurp(dir / "b.ppm"));
  ASSERT_EQ(run("render " + q(ds) + " --nd 60 --format png --out " + q(dir / "c.png")), 0);
  const auto log = dir / "metrics.txt";
  ASSERT_EQ(run("metrics " + q(dir / "a.ppm") + " " + q(dir / "c.png"), log), 0);
  const std::string text = cspacevis::read_text_file(log);
  EXPECT_NE(text.find("\"mismatch_ratio\": 0.0"), std::string::npos) << text;
  EXPECT_NE(text.find("\"mse\": 0.0"), std::string::npos) << text;
}

TEST(Cli, DiffWritesImagesAndStats) {
  const auto dir = scratch("cli_diff");
  ASSERT_EQ(run("generate --joints 3 --samples 300 --seed 1 --out-dir " + q(dir / "x")), 0);
  ASSERT_EQ(run("generate --joints 3 --samples 300 --seed 2 --out-dir " + q(dir / "y")), 0);
  ASSERT_EQ(run("render " + q(dir / "x" / "dataset.json") + " --nd 40 --out " + q(dir / "x.ppm")), 0);
  ASSERT_EQ(run("render " + q(dir / "y" / "dataset.json") + " --nd 40 --out " + q(dir / "y.ppm")), 0);
  ASSERT_EQ(run("diff " + q(dir / "x.ppm") + " " + q(dir / "y.ppm") + " --out-dir " + q(dir / "d")), 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "d" / "stats.json"));
  const std::string stats = cspacevis::read_text_file(dir / "d" / "stats.json");
  EXPECT_NE(stats.find("nonwhite_before"), std::string::npos);
}

TEST(Cli, InputErrorsExitOne) {
  const auto dir = scratch("cli_errors");
  EXPECT_EQ(run("render " + q(dir / "missing.json")), 1);
  cspacevis::write_text_file(dir / "bad.json", "{\"n_joints\": 2, \"samples\": [[9, 9]], \"labels\": [0]}");
  EXPECT_EQ(run("render " + q(dir / "bad.json") + " --out-dir " + q(dir)), 1);
  ASSERT_EQ(run("generate --joints 7 --samples 50 --out-dir " + q(dir / "g")), 0);
  EXPECT_EQ(run("render " + q(dir / "g" / "dataset.json") + " --canvas 300 --out-dir " + q(dir)), 1);
  EXPECT_EQ(run("render " + q(dir / "g" / "dataset.json") + " --plot sometimes --out-dir " + q(dir)), 1);
  EXPECT_EQ(run("no-such-command"), 1);
  EXPECT_EQ(run("generate --joints 0 --out-dir " + q(dir / "h")), 1);
}

TEST(Cli, BlockedSceneExitsTwo) {
  const auto dir = scratch("cli_blocked");
  cspacevis::write_text_file(dir / "scene.json", R"({"schema_version": 1,
    "robot": {"base": [0, 0], "links": [{"length": 1, "half_width": 0.0},
                                         {"length": 1, "half_width": 0.0}]},
    "workspace": {"id": "wall", "obstacles": [{"center": [0, 0], "radius": 5}]}})");
  EXPECT_EQ(run("generate --scene " + q(dir / "scene.json") + " --samples 5 --out-dir " + q(dir / "o")), 2);
}

TEST(Cli, ExperimentsWriteVersionedReports) {
  const auto dir = scratch("cli_exp");
  cspacevis::write_text_file(dir / "degenerate.json",
                             R"({"n_joints": 3, "m": 200, "n_workspaces": 1, "n_d": 50, "fractions": [1.0]})");
  EXPECT_EQ(run("exp-accuracy --config " + q(dir / "degenerate.json") + " --out-dir " + q(dir / "a")), 2);
  EXPECT_TRUE(std::filesystem::exists(dir / "a" / "report.json"));

  cspacevis::write_text_file(dir / "subset.json",
                             R"({"n_joints": 3, "m": 300, "n_workspaces": 2, "n_d": 50, "fractions": [0.5, 0.2]})");
  ASSERT_EQ(run("exp-subset --config " + q(dir / "subset.json") +
                " --save-images --format png --out-dir " + q(dir / "s")), 0);
  const std::string report = cspacevis::read_text_file(dir / "s" / "report.json");
  EXPECT_NE(report.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_FALSE(std::filesystem::is_empty(dir / "s" / "images"));

  cspacevis::write_text_file(dir / "unknown.json", R"({"joints": 3})");
  EXPECT_EQ(run("exp-subset --config " + q(dir / "unknown.json")), 1);
}

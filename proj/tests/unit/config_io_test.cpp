#include <gtest/gtest.h>

#include "cspacevis/config_io.hpp"
#include "cspacevis/errors.hpp"
#include "oracles.hpp"

using namespace cspacevis;

TEST(RenderConfig, DefaultsWhenEmpty) {
  const auto cfg = render_config_from_json("{}");
  EXPECT_EQ(cfg.disc.n_d, 500);
  EXPECT_EQ(cfg.pert.epsilon_max, 0.0);
  EXPECT_EQ(cfg.policy, PlotPolicy::FreeOnly);
  EXPECT_EQ(cfg.colormap, earth_colormap());
  EXPECT_FALSE(cfg.canvas_px.has_value());
}

TEST(RenderConfig, RoundTrip) {
  RenderConfig cfg;
  cfg.disc.n_d = 64;
  cfg.pert.epsilon_max = 0.01;
  cfg.policy = PlotPolicy::CollisionGray;
  cfg.crop_legend = true;
  cfg.canvas_px = 1200;
  cfg.point_px = 3;
  cfg.background = RGB8{1, 2, 3};
  cfg.colormap = {{{0.0, kBlack}, {1.0, RGB8{10, 20, 30}}}};
  const auto back = render_config_from_json(render_config_to_json(cfg));
  EXPECT_EQ(back.disc.n_d, 64);
  EXPECT_EQ(back.pert.epsilon_max, 0.01);
  EXPECT_EQ(back.policy, PlotPolicy::CollisionGray);
  EXPECT_TRUE(back.crop_legend);
  EXPECT_EQ(back.canvas_px, 1200);
  EXPECT_EQ(back.point_px, 3);
  EXPECT_EQ(back.background, (RGB8{1, 2, 3}));
  EXPECT_EQ(back.colormap, cfg.colormap);
}

TEST(RenderConfig, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(render_config_from_json(R"({"nd": 4})"), InputError);
  EXPECT_THROW(render_config_from_json(R"({"plot": "sometimes"})"), InputError);
  EXPECT_THROW(render_config_from_json(R"({"n_d": "many"})"), InputError);
  EXPECT_THROW(render_config_from_json("[1, 2]"), InputError);
}

TEST(RenderConfig, ExplicitCanvasMustFit) {
  RenderConfig cfg;
  cfg.canvas_px = 400;
  EXPECT_THROW(resolve_layout(cfg, 7), ConfigError);
  cfg.canvas_px.reset();
  EXPECT_NO_THROW(resolve_layout(cfg, 7));
  cfg.ring_step = 3;
  EXPECT_EQ(resolve_layout(cfg, 2).ring_step, 3);
}

TEST(RenderConfig, CropRowsFollowFlag) {
  RenderConfig cfg;
  EXPECT_EQ(metric_crop_rows(cfg, 3), 0);
  cfg.crop_legend = true;
  EXPECT_EQ(metric_crop_rows(cfg, 3), resolve_layout(cfg, 3).legend_strip_px);
}

TEST(RenderConfig, RenderMatchesExplicitArguments) {
  const auto ds = oracle::random_dataset(3, 500, 6);
  RenderConfig cfg;
  cfg.disc.n_d = 40;
  const auto direct = render(ds, cfg.disc, cfg.pert, cfg.colormap, default_layout(3, 40));
  EXPECT_EQ(render(ds, cfg), direct);
}

TEST(Scene, RoundTrip) {
  Scene s;
  s.robot = make_uniform_robot(3, 0.7, 0.02);
  s.robot.base = {0.5, -0.25};
  s.workspace = random_workspace(4, 3, {{-2, -2}, {2, 2}}, {0.1, 0.4});
  const auto back = scene_from_json(scene_to_json(s));
  EXPECT_EQ(back.robot, s.robot);
  EXPECT_EQ(back.workspace, s.workspace);
  EXPECT_THROW(scene_from_json(R"({"schema_version": 2})"), InputError);
}

TEST(PlotPolicyNames, ParseAndPrint) {
  for (auto p : {PlotPolicy::FreeOnly, PlotPolicy::All, PlotPolicy::CollisionGray}) {
    EXPECT_EQ(parse_plot_policy(to_string(p)), p);
  }
  EXPECT_THROW(parse_plot_policy("maybe"), InputError);
}

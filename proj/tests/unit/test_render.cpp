#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "periodmap/errors.hpp"
#include "periodmap/presets.hpp"
#include "periodmap/render.hpp"

using namespace periodmap;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Render : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("PERIODMAP_SVG_PALETTE"); }
};

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_F(Render, ArcBetween) {
  const render::GeodesicArc d = render::arc_between({1, 0}, {-1, 0});
  EXPECT_TRUE(d.diameter);
  const render::GeodesicArc a = render::arc_between({1, 0}, {0, 1});
  EXPECT_FALSE(a.diameter);
  EXPECT_NEAR(a.center[0], 1.0, 1e-12);
  EXPECT_NEAR(a.center[1], 1.0, 1e-12);
  EXPECT_NEAR(a.radius, 1.0, 1e-12);
  // Orthogonal to the unit circle: |c|^2 = 1 + r^2.
  const render::GeodesicArc b = render::arc_between({std::cos(0.3), std::sin(0.3)}, {std::cos(2.0), std::sin(2.0)});
  EXPECT_NEAR(b.center[0] * b.center[0] + b.center[1] * b.center[1], 1 + b.radius * b.radius, 1e-12);
}

TEST_F(Render, SymmetricTriangle) {
  const render::DiskScene s = render::build_config_scene(symmetric_family(3), "symmetric");
  EXPECT_EQ(s.arcs.size(), 3u);
  EXPECT_EQ(s.dots.size(), 3u);
  EXPECT_TRUE(s.encloses);
  EXPECT_EQ(render::render_config_svg(symmetric_family(3), "symmetric a=3"),
            slurp(std::string(PERIODMAP_GOLDEN_DIR) + "/symmetric-a3.svg"));
}

TEST_F(Render, PresetElementsFollowTheClassifier) {
  const SurfaceConfig cfg = preset_config("fig6-i");
  const render::DiskScene s = render::build_config_scene(cfg, "fig6-i");
  std::size_t arcs = 0, dots = 0, ideals = 0;
  for (const auto& ns : enumerate_faces(2, 1)) {
    const ConstraintSet c = bplus1_summary(cfg, ns);
    if (c.kind == ConstraintKind::IdealPoint) ++ideals;
    else if (c.locus_dim == 1) ++arcs;
    else if (c.locus_dim == 0) ++dots;
  }
  EXPECT_EQ(s.arcs.size(), arcs);
  EXPECT_EQ(s.dots.size(), dots);
  EXPECT_EQ(s.ideals.size(), ideals);
}

TEST_F(Render, DegenerateFlagsNoEnclosure) {
  const std::string svg = render::render_config_svg(preset_config("degenerate"), "degenerate");
  EXPECT_NE(svg.find("\"encloses\": false"), std::string::npos);
  const std::string tri = render::render_config_svg(symmetric_family(3), "t");
  EXPECT_NE(tri.find("\"encloses\": true"), std::string::npos);
}

TEST_F(Render, NeedsPlaneConfigurations) {
  const SurfaceConfig four = make_config(make_diagonal_form({1, -1, -1, -1}), {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 2}});
  EXPECT_THROW(render::build_config_scene(four, "x"), InputError);
  EXPECT_THROW(render::build_config_scene(make_config(make_diagonal_form({1, 1, -1}), {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}), "x"),
               PreconditionError);
}

TEST_F(Render, PaletteOverrides) {
  const render::Palette p = render::apply_overrides(render::default_palette(), "singles=#010203,boundary=#ffffff");
  EXPECT_EQ(p.singles, "#010203");
  EXPECT_EQ(p.boundary, "#ffffff");
  EXPECT_EQ(p.doubles, render::default_palette().doubles);
  EXPECT_THROW(render::apply_overrides(p, "singles=red"), InputError);
  EXPECT_THROW(render::apply_overrides(p, "nothing=#000000"), InputError);

  setenv("PERIODMAP_SVG_PALETTE", "boundary=#abcdef", 1);
  EXPECT_NE(render::render_config_svg(symmetric_family(3), "t").find("#abcdef"), std::string::npos);
  unsetenv("PERIODMAP_SVG_PALETTE");
}

TEST_F(Render, LatticeCones) {
  // Q = diag(-1, 1): positive where |slope| > 1.
  const std::string a = render::render_lattice_lines_svg(make_diagonal_form({-1, 1}), {}, "a");
  EXPECT_NE(a.find("class=\"positive\" data-dir=\"1,2\""), std::string::npos);
  EXPECT_NE(a.find("class=\"negative\" data-dir=\"2,1\""), std::string::npos);
  EXPECT_NE(a.find("class=\"null\" data-dir=\"1,1\""), std::string::npos);
  // Hyperbolic plane: positive where the slope is positive.
  const std::string h = render::render_lattice_lines_svg(make_form({{0, 1}, {1, 0}}), {}, "h");
  EXPECT_NE(h.find("class=\"positive\" data-dir=\"1,3\""), std::string::npos);
  EXPECT_NE(h.find("class=\"negative\" data-dir=\"-1,3\""), std::string::npos);
  EXPECT_NE(h.find("class=\"null\" data-dir=\"1,0\""), std::string::npos);
  EXPECT_EQ(count(h, "class=\"cone\""), 2u);

  EXPECT_THROW(render::render_lattice_lines_svg(make_diagonal_form({-1, -2}), {}, "n"), DomainError);
}

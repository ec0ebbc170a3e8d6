#pragma once

// SVG scenes: constraint configurations in the Poincare disk, and lattice
// pictures for rank-2 forms. Output is byte-deterministic.

#include <filesystem>
#include <string>
#include <vector>

#include "periodmap/face_constraints.hpp"

namespace periodmap::render {

/// Colors by element class. PERIODMAP_SVG_PALETTE overrides entries, e.g.
/// "singles=#00aa00,doubles=#0000ff".
struct Palette {
  std::string singles = "#2e8b57";  // faces labelled by a one-element subset
  std::string doubles = "#2b5fb4";  // two-element subsets
  std::string triples = "#c0392b";  // three-element subsets
  std::string boundary = "#222222";
  std::string cone = "#f3e2b3";
  std::string lattice = "#333333";
  std::string pencil = "#9a9a9a";
  std::string axis = "#000000";
};

Palette default_palette();
/// Default palette with the environment overrides applied; InputError on a
/// malformed override string.
Palette palette_from_env();
Palette apply_overrides(Palette p, const std::string& spec);

struct GeodesicArc {
  std::string face;  // chain label, e.g. "1;1,2"
  int subset_size = 0;
  Vec from, to;      // ideal endpoints on the unit circle
  bool diameter = false;
  Vec center;        // orthogonal circle, unused for diameters
  double radius = 0;
};

struct DiskMark {
  std::string face;
  int subset_size = 0;
  Vec at;
};

struct DiskScene {
  std::string title;
  std::vector<GeodesicArc> arcs;
  std::vector<DiskMark> dots;    // interior points
  std::vector<DiskMark> ideals;  // boundary points
  double enclosed_area = 0;      // Klein-model area through the vertex faces
  bool encloses = false;
};

/// Arc of the geodesic with the given ideal endpoints.
GeodesicArc arc_between(const Vec& e1, const Vec& e2);

/// Codimension-one faces of an n = 2 configuration. Requires signature (1,2).
DiskScene build_config_scene(const SurfaceConfig& cfg, std::string title);
std::string to_svg(const DiskScene& scene, const Palette& palette);

std::string render_config_svg(const SurfaceConfig& cfg, const std::string& title);
void render_config(const SurfaceConfig& cfg, const std::string& title, const std::filesystem::path& out);

/// Integer dots and lines through the origin for a rank-2 form of signature
/// (1,1), positive cone shaded, `axes` dashed. DomainError when the form has
/// no positive vectors.
std::string render_lattice_lines_svg(const FormPtr& form, const std::vector<Subspace>& axes, const std::string& title);
void render_lattice_lines(const FormPtr& form, const std::vector<Subspace>& axes, const std::string& title,
                          const std::filesystem::path& out);

/// Writes text to out, or to stdout when out is "-".
void write_text(const std::string& text, const std::filesystem::path& out);

}  // namespace periodmap::render

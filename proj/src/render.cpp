#include "periodmap/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <regex>
#include <sstream>

#include "periodmap/errors.hpp"

namespace periodmap::render {

namespace {

constexpr double kCanvas = 480;
constexpr double kMid = kCanvas / 2;
constexpr double kDiskScale = 220;  // pixels per unit in the disk picture
constexpr double kLatticeScale = 50;
constexpr int kLatticeReach = 4;

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const std::string& color_for(const Palette& p, int subset_size) {
  if (subset_size == 1) return p.singles;
  if (subset_size == 2) return p.doubles;
  return p.triples;
}

struct Screen {
  double x, y;
};

Screen disk_px(const Vec& z) { return {kMid + kDiskScale * z[0], kMid - kDiskScale * z[1]}; }
Screen lattice_px(double x, double y) { return {kMid + kLatticeScale * x, kMid - kLatticeScale * y}; }

// Coordinate c of a lattice direction of length n, pushed past the view edge.
double far_point(long c, double n, double reach) { return 2 * reach * static_cast<double>(c) / n; }

std::string header(const std::string& title) {
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\"" << kCanvas
    << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
    << "  <title>" << xml_escape(title) << "</title>\n";
  return o.str();
}

}  // namespace

Palette default_palette() { return Palette{}; }

Palette apply_overrides(Palette p, const std::string& spec) {
  static const std::regex color("#[0-9a-fA-F]{6}");
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("palette entry '" + item + "' is not key=#rrggbb");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (!std::regex_match(value, color)) throw InputError("palette color '" + value + "' is not #rrggbb");
    if (key == "singles") p.singles = value;
    else if (key == "doubles") p.doubles = value;
    else if (key == "triples") p.triples = value;
    else if (key == "boundary") p.boundary = value;
    else if (key == "cone") p.cone = value;
    else if (key == "lattice") p.lattice = value;
    else if (key == "pencil") p.pencil = value;
    else if (key == "axis") p.axis = value;
    else throw InputError("unknown palette key '" + key + "'");
  }
  return p;
}

Palette palette_from_env() {
  const char* env = std::getenv("PERIODMAP_SVG_PALETTE");
  return env ? apply_overrides(default_palette(), env) : default_palette();
}

GeodesicArc arc_between(const Vec& e1, const Vec& e2) {
  GeodesicArc a;
  a.from = e1;
  a.to = e2;
  if (std::hypot(e1[0] + e2[0], e1[1] + e2[1]) < 1e-9) {
    a.diameter = true;
    return a;
  }
  const double k = 1 + e1[0] * e2[0] + e1[1] * e2[1];
  a.center = {(e1[0] + e2[0]) / k, (e1[1] + e2[1]) / k};
  a.radius = std::sqrt(std::max(0.0, a.center[0] * a.center[0] + a.center[1] * a.center[1] - 1));
  return a;
}

DiskScene build_config_scene(const SurfaceConfig& cfg, std::string title) {
  if (cfg.n() != 2) throw InputError("disk rendering needs three vectors");
  const Signature s = signature(*cfg.form);
  if (!(s == Signature{1, 2, 0})) throw PreconditionError("disk rendering needs ambient signature (1,2), got " + to_string(s));
  const StandardEmbedding emb = standard_embedding(cfg.form);

  DiskScene scene;
  scene.title = std::move(title);
  for (const auto& ns : enumerate_faces(2, 1)) {
    const ConstraintSet cs = bplus1_summary(cfg, ns);
    const std::string label = ns.to_short_string();
    const int size = ns.last().size();
    if (cs.kind == ConstraintKind::IdealPoint) {
      scene.ideals.push_back({label, size, ideal_to_disk(emb.to_standard(cs.generators.front()))});
    } else if (cs.locus_dim == 0) {
      RVector v = cs.locus.basis().front();
      if (sgn(cfg.form->evaluate(v, v)) <= 0) v = cs.generators.front();
      scene.dots.push_back({label, size, to_poincare_disk(line_to_hpoint(emb, v))});
    } else if (cs.locus_dim == 1) {
      // Positive lines of a (1,1) plane: the wall of its orthogonal line.
      const RVector wall = orth_complement(cs.locus).basis().front();
      const auto ends = geodesic_endpoints(emb, wall);
      GeodesicArc arc = arc_between(ends[0], ends[1]);
      arc.face = label;
      arc.subset_size = size;
      scene.arcs.push_back(std::move(arc));
    }
    // locus_dim 2 is the whole disk: no constraint to draw.
  }
  scene.enclosed_area = enclosed_klein_area(cfg);
  scene.encloses = scene.enclosed_area > 1e-12;
  return scene;
}

std::string to_svg(const DiskScene& scene, const Palette& palette) {
  std::ostringstream o;
  o << header(scene.title);
  o << "  <metadata>{\"encloses\": " << (scene.encloses ? "true" : "false") << ", \"enclosed_area\": "
    << fmt(scene.enclosed_area) << "}</metadata>\n";
  o << "  <circle class=\"boundary\" cx=\"" << fmt(kMid) << "\" cy=\"" << fmt(kMid) << "\" r=\"" << fmt(kDiskScale)
    << "\" fill=\"none\" stroke=\"" << palette.boundary << "\" stroke-width=\"1.5\"/>\n";
  for (const auto& a : scene.arcs) {
    const Screen p = disk_px(a.from), q = disk_px(a.to);
    o << "  <path class=\"geodesic\" data-face=\"" << a.face << "\" d=\"M " << fmt(p.x) << ' ' << fmt(p.y) << ' ';
    if (a.diameter) {
      o << "L " << fmt(q.x) << ' ' << fmt(q.y);
    } else {
      const Screen c = disk_px(a.center);
      const double cross = (p.x - c.x) * (q.y - c.y) - (p.y - c.y) * (q.x - c.x);
      const std::string r = fmt(a.radius * kDiskScale);
      o << "A " << r << ' ' << r << " 0 0 " << (cross > 0 ? 1 : 0) << ' ' << fmt(q.x) << ' ' << fmt(q.y);
    }
    o << "\" fill=\"none\" stroke=\"" << color_for(palette, a.subset_size) << "\" stroke-width=\"2\"/>\n";
  }
  for (const auto& d : scene.dots) {
    const Screen p = disk_px(d.at);
    o << "  <circle class=\"point\" data-face=\"" << d.face << "\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
      << "\" r=\"4\" fill=\"" << color_for(palette, d.subset_size) << "\"/>\n";
  }
  for (const auto& d : scene.ideals) {
    const Screen p = disk_px(d.at);
    o << "  <circle class=\"ideal\" data-face=\"" << d.face << "\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
      << "\" r=\"6\" fill=\"none\" stroke=\"" << color_for(palette, d.subset_size) << "\" stroke-width=\"2\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string render_config_svg(const SurfaceConfig& cfg, const std::string& title) {
  return to_svg(build_config_scene(cfg, title), palette_from_env());
}

void render_config(const SurfaceConfig& cfg, const std::string& title, const std::filesystem::path& out) {
  write_text(render_config_svg(cfg, title), out);
}

std::string render_lattice_lines_svg(const FormPtr& form, const std::vector<Subspace>& axes, const std::string& title) {
  if (form->dim() != 2) throw InputError("lattice pictures need a rank-2 form");
  if (signature(*form).plus == 0) throw DomainError("the positive cone of this form is empty");
  const Palette palette = palette_from_env();
  const double a = form->gram()[0][0].get_d(), b = form->gram()[0][1].get_d(), d = form->gram()[1][1].get_d();
  const double reach = kLatticeReach + 0.6;
  const Screen lo = lattice_px(-reach, reach);
  const double side = 2 * reach * kLatticeScale;

  std::ostringstream o;
  o << header(title);
  o << "  <defs><clipPath id=\"view\"><rect x=\"" << fmt(lo.x) << "\" y=\"" << fmt(lo.y) << "\" width=\"" << fmt(side)
    << "\" height=\"" << fmt(side) << "\"/></clipPath></defs>\n";
  o << "  <g clip-path=\"url(#view)\">\n";

  // Q(cos t, sin t) = A + B cos(2t - phi); positive on |2t - phi| < alpha.
  const double A = (a + d) / 2, B = std::hypot((a - d) / 2, b), phi = std::atan2(b, (a - d) / 2);
  if (B < 1e-15 || -A / B <= -1) {
    o << "    <rect class=\"cone\" x=\"" << fmt(lo.x) << "\" y=\"" << fmt(lo.y) << "\" width=\"" << fmt(side)
      << "\" height=\"" << fmt(side) << "\" fill=\"" << palette.cone << "\"/>\n";
  } else {
    const double alpha = std::acos(std::clamp(-A / B, -1.0, 1.0));
    const double far = 2 * reach;
    for (int half = 0; half < 2; ++half) {
      o << "    <polygon class=\"cone\" points=\"" << fmt(kMid) << ',' << fmt(kMid);
      for (int k = 0; k <= 64; ++k) {
        const double t = (phi - alpha) / 2 + alpha * k / 64.0 + half * std::numbers::pi;
        const Screen p = lattice_px(far * std::cos(t), far * std::sin(t));
        o << ' ' << fmt(p.x) << ',' << fmt(p.y);
      }
      o << "\" fill=\"" << palette.cone << "\"/>\n";
    }
  }

  // Pencil through primitive lattice directions.
  for (long q = 0; q <= kLatticeReach; ++q)
    for (long p = -kLatticeReach; p <= kLatticeReach; ++p) {
      if ((q == 0 && p <= 0) || std::gcd(p, q) != 1) continue;
      const RVector v{Rational(p), Rational(q)};
      const int s = sgn(form->evaluate(v, v));
      const char* cls = s > 0 ? "positive" : (s < 0 ? "negative" : "null");
      const double n = std::hypot(static_cast<double>(p), static_cast<double>(q));
      const Screen u = lattice_px(far_point(p, n, reach), far_point(q, n, reach));
      const Screen w = lattice_px(-far_point(p, n, reach), -far_point(q, n, reach));
      o << "    <line class=\"" << cls << "\" data-dir=\"" << p << ',' << q << "\" x1=\"" << fmt(w.x) << "\" y1=\"" << fmt(w.y) << "\" x2=\"" << fmt(u.x)
        << "\" y2=\"" << fmt(u.y) << "\" stroke=\"" << palette.pencil << "\" stroke-width=\"" << (s > 0 ? "1.2" : "0.6")
        << "\"/>\n";
    }

  for (const auto& ax : axes) {
    if (ax.dim() != 1) continue;
    const auto v = to_double(ax.basis().front());
    const double n = std::hypot(v[0], v[1]);
    const Screen u = lattice_px(2 * reach * v[0] / n, 2 * reach * v[1] / n);
    const Screen w = lattice_px(-2 * reach * v[0] / n, -2 * reach * v[1] / n);
    o << "    <line class=\"limit-axis\" x1=\"" << fmt(w.x) << "\" y1=\"" << fmt(w.y) << "\" x2=\"" << fmt(u.x)
      << "\" y2=\"" << fmt(u.y) << "\" stroke=\"" << palette.axis << "\" stroke-width=\"2\" stroke-dasharray=\"8 5\"/>\n";
  }
  o << "  </g>\n";

  for (long y = kLatticeReach; y >= -kLatticeReach; --y)
    for (long x = -kLatticeReach; x <= kLatticeReach; ++x) {
      const Screen p = lattice_px(static_cast<double>(x), static_cast<double>(y));
      o << "  <circle class=\"lattice\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"2.5\" fill=\""
        << palette.lattice << "\"/>\n";
    }
  o << "</svg>\n";
  return o.str();
}

void render_lattice_lines(const FormPtr& form, const std::vector<Subspace>& axes, const std::string& title,
                          const std::filesystem::path& out) {
  write_text(render_lattice_lines_svg(form, axes, title), out);
}

void write_text(const std::string& text, const std::filesystem::path& out) {
  if (out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("cannot write " + out.string());
  f << text;
  if (!f) throw InputError("failed writing " + out.string());
}

}  // namespace periodmap::render

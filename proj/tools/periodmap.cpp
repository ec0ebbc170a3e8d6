// periodmap: command-line front end. Exit status 0 on success, 1 for
// domain and precondition failures, 2 for malformed input or usage errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "periodmap/decomposition.hpp"
#include "periodmap/errors.hpp"
#include "periodmap/face_constraints.hpp"
#include "periodmap/io.hpp"
#include "periodmap/kernels.hpp"
#include "periodmap/permutahedron.hpp"
#include "periodmap/presets.hpp"
#include "periodmap/render.hpp"
#include "periodmap/systole.hpp"

using namespace periodmap;
using io::json;

namespace {

struct Source {
  std::string preset;
  std::string a;
  std::string config;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--preset", src.preset, "Built-in configuration (fig6-i..iv, degenerate, symmetric)");
  cmd->add_option("--a", src.a, "Parameter of the symmetric preset, as p/q");
  cmd->add_option("--config", src.config, "Configuration JSON file");
}

SurfaceConfig load_config(const Source& src) {
  if (src.preset.empty() == src.config.empty()) throw InputError("give exactly one of --preset and --config");
  if (!src.config.empty()) return io::config_from_json(io::read_json_file(src.config));
  std::optional<Rational> a;
  if (!src.a.empty()) a = parse_rational(src.a);
  return preset_config(src.preset, a);
}

FormPtr load_form(const Source& src) {
  if (!src.config.empty() && src.preset.empty()) return io::form_from_json(io::read_json_file(src.config));
  return load_config(src).form;
}

std::string fixed(double x, int digits = 9) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(digits) << x;
  std::string s = o.str();
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string fixed(const Vec& v, int digits = 9) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fixed(v[i], digits);
  return out + ")";
}

std::string rows(const RMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? " " : "") + to_string(m[i]);
  return out.empty() ? "-" : out;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---- classify -------------------------------------------------------------

int run_classify(const Source& src, const std::string& span, bool as_json) {
  const FormPtr form = load_form(src);
  const RMatrix gens = parse_matrix(span);
  for (const auto& g : gens)
    if (g.size() != form->dim()) throw InputError("span vector length does not match the form");
  const Subspace sub(form, gens);
  const ConstraintSet cs = classify_span(sub);
  if (as_json) {
    print_json({{"span", io::subspace_to_json(sub)},
                {"signature", io::signature_to_json(signature(sub))},
                {"constraint", io::constraint_to_json(cs)}});
    return 0;
  }
  std::cout << "span        " << rows(sub.basis()) << '\n'
            << "signature   " << to_string(signature(sub)) << '\n'
            << "kind        " << to_string(cs.kind) << '\n'
            << "generators  " << rows(cs.generators) << '\n'
            << "locus       " << rows(cs.locus.basis()) << "  (hyperbolic dim " << cs.locus_dim << ")\n";
  return 0;
}

// ---- faces ----------------------------------------------------------------

int run_faces(const Source& src, const std::string& chain, bool as_json) {
  const SurfaceConfig cfg = load_config(src);
  if (!cfg.independent()) std::cerr << "warning: configuration vectors are linearly dependent\n";
  std::vector<NestedSequence> faces;
  if (!chain.empty()) {
    faces.push_back(NestedSequence::parse(cfg.n(), chain));
  } else {
    for (int c = 1; c <= cfg.n(); ++c) {
      auto more = enumerate_faces(cfg.n(), c);
      faces.insert(faces.end(), more.begin(), more.end());
    }
  }
  const auto constraints = kernels::face_sweep_parallel(cfg, faces);

  if (as_json) {
    json out = {{"config", io::config_to_json(cfg)}, {"faces", json::array()}};
    for (const auto& f : constraints) {
      json j = io::face_to_json(f);
      const auto ip = iplus(cfg, f.sequence);
      j["iplus"] = ip ? json(*ip) : json(nullptr);
      const DimensionIdentity id = dimension_identity(cfg, f.sequence);
      j["dimension_identity"] = {{"lhs", id.lhs}, {"rhs", id.rhs}, {"nesting_ok", id.nesting_ok}, {"holds", id.holds()}};
      out["faces"].push_back(std::move(j));
    }
    print_json(out);
    return 0;
  }
  std::cout << std::left << std::setw(22) << "face" << std::setw(5) << "i+" << std::setw(22) << "kind" << std::setw(7)
            << "locus" << std::setw(11) << "witness" << std::setw(10) << "identity"
            << "generators\n";
  for (const auto& f : constraints) {
    const auto ip = iplus(cfg, f.sequence);
    std::cout << std::setw(22) << f.sequence.to_string() << std::setw(5) << (ip ? std::to_string(*ip) : "-")
              << std::setw(22) << to_string(f.summary.kind) << std::setw(7) << f.summary.locus_dim << std::setw(11)
              << to_string(f.witness_signature) << std::setw(10)
              << (check_dimension_identity(cfg, f.sequence) ? "ok" : "FAIL") << rows(f.summary.generators) << '\n';
  }
  return 0;
}

// ---- simplex --------------------------------------------------------------

int run_simplex(const Source& src, bool as_json) {
  const SurfaceConfig cfg = load_config(src);
  const SimplexVertices sv = simplex_from_walls(cfg);
  if (as_json) {
    json vs = json::array();
    for (std::size_t i = 0; i < sv.vertices.size(); ++i) {
      vs.push_back({{"opposite", i + 1},
                    {"direction", io::vector_to_json(sv.directions[i])},
                    {"norm", io::rational_to_json(sv.norms[i])},
                    {"hyperboloid", sv.vertices[i].coords()},
                    {"disk", to_poincare_disk(sv.vertices[i])}});
    }
    print_json({{"vertices", vs}});
    return 0;
  }
  for (std::size_t i = 0; i < sv.vertices.size(); ++i) {
    std::cout << "vertex opposite wall " << i + 1 << '\n'
              << "  direction    " << to_string(sv.directions[i]) << "  Q = " << to_string(sv.norms[i]) << '\n'
              << "  hyperboloid  " << fixed(sv.vertices[i].coords()) << '\n'
              << "  disk         " << fixed(to_poincare_disk(sv.vertices[i])) << '\n';
  }
  return 0;
}

// ---- limit ----------------------------------------------------------------

int run_limit(const std::string& config, const std::string& preset, bool as_json) {
  if (config.empty() == preset.empty()) throw InputError("give exactly one of --preset and --config");
  const DecompositionData data =
      config.empty() ? decomposition_preset(preset) : io::decomposition_from_json(io::read_json_file(config));
  const ValidationReport report = validate(data);
  if (!report.ok()) {
    for (const auto& issue : report.issues) {
      std::cerr << "invalid decomposition: " << issue.condition << " (witness " << to_string(issue.witness_a);
      if (!issue.witness_b.empty()) std::cerr << ", " << to_string(issue.witness_b);
      std::cerr << ")\n";
    }
    return 1;
  }
  const Subspace limit = limit_period_subspace(data);
  const bool betti = check_betti_identity(data), bpm = check_bpm_identity(data);
  if (as_json) {
    print_json({{"limit", io::subspace_to_json(limit)},
                {"signature", io::signature_to_json(signature(limit))},
                {"betti_identity", betti},
                {"bpm_identity", bpm}});
    return 0;
  }
  std::cout << "limit       " << rows(limit.basis()) << '\n'
            << "signature   " << to_string(signature(limit)) << '\n'
            << "betti       " << (betti ? "ok" : "FAIL") << '\n'
            << "b+/b-       " << (bpm ? "ok" : "FAIL") << '\n';
  return 0;
}

// ---- systole --------------------------------------------------------------

struct SystoleArgs {
  std::string period;
  bool sup = false;
  double grid = 0.05;
  double refine = 1e-6;
  long bound = 64;
};

int run_systole(const Source& src, const SystoleArgs& args, bool as_json) {
  const FormPtr form = load_form(src);
  if (args.sup == !args.period.empty()) throw InputError("give exactly one of --period and --sup");
  if (args.sup) {
    CsSearch search;
    search.grid = args.grid;
    search.refine = args.refine;
    search.lattice_bound = args.bound;
    const CsResult r = cs_supremum(form, search);
    if (as_json) {
      print_json(io::cs_to_json(r));
      return 0;
    }
    std::cout << "CS          " << fixed(r.value, 10) << '\n'
              << "point       " << fixed(r.point.coords()) << '\n'
              << "disk        " << fixed(r.disk) << '\n'
              << "grid        " << r.grid << "  refine " << r.refine << "  evaluations " << r.evaluations << '\n';
    return 0;
  }
  const RMatrix gens = parse_matrix(args.period);
  for (const auto& g : gens)
    if (g.size() != form->dim()) throw InputError("period vector length does not match the form");
  const SystoleResult r = conf_systole(PeriodPoint::exact(Subspace(form, gens)), args.bound);
  if (as_json) {
    print_json(io::systole_to_json(r));
    return 0;
  }
  std::cout << "conf        " << fixed(r.value, 12);
  if (r.value_squared) std::cout << "  (conf^2 = " << to_string(*r.value_squared) << ")";
  std::cout << '\n' << "minimizers ";
  for (const auto& w : r.minimizers) {
    std::cout << " (";
    for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? ", " : "") << w[i];
    std::cout << ')';
  }
  std::cout << '\n'
            << "box         " << r.lattice_bound << "  certification radius " << r.certification_radius
            << (r.certified ? "  certified" : "  UNCERTIFIED") << '\n';
  return 0;
}

// ---- permutahedron --------------------------------------------------------

// Orthonormal coordinates on the hyperplane sum x = const (Helmert basis).
Vec helmert(const std::vector<int>& x) {
  Vec y;
  for (std::size_t k = 1; k < x.size(); ++k) {
    double s = 0;
    for (std::size_t i = 0; i < k; ++i) s += x[i];
    s -= static_cast<double>(k) * x[k];
    y.push_back(s / std::sqrt(static_cast<double>(k * (k + 1))));
  }
  return y;
}

// Vertex indices of a 2-dimensional face in cyclic order.
std::vector<std::size_t> cyclic(const std::vector<Vec>& pts, std::vector<std::size_t> idx) {
  const std::size_t d = pts.front().size();
  Vec c(d, 0.0);
  for (auto i : idx)
    for (std::size_t k = 0; k < d; ++k) c[k] += pts[i][k] / static_cast<double>(idx.size());
  auto diff = [&](std::size_t i) {
    Vec v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = pts[i][k] - c[k];
    return v;
  };
  auto dot = [](const Vec& a, const Vec& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); };
  Vec u = diff(idx.front());
  const double nu = std::sqrt(dot(u, u));
  for (auto& x : u) x /= nu;
  // Second in-plane axis: Gram-Schmidt on the first vertex not parallel to u.
  Vec w(d, 0.0);
  for (auto i : idx) {
    Vec v = diff(i);
    const double t = dot(v, u);
    for (std::size_t k = 0; k < d; ++k) v[k] -= t * u[k];
    const double nv = std::sqrt(dot(v, v));
    if (nv > 1e-9) {
      for (std::size_t k = 0; k < d; ++k) w[k] = v[k] / nv;
      break;
    }
  }
  std::vector<std::pair<double, std::size_t>> ang;
  for (auto i : idx) {
    const Vec v = diff(i);
    ang.emplace_back(std::atan2(dot(v, w), dot(v, u)), i);
  }
  std::sort(ang.begin(), ang.end());
  std::vector<std::size_t> out;
  for (const auto& a : ang) out.push_back(a.second);
  return out;
}

int run_export(int n, const std::string& format) {
  const PermRealization real = realize(n);
  if (format == "json") {
    json faces = json::array();
    for (int c = 1; c <= n; ++c)
      for (const auto& ns : enumerate_faces(n, c)) {
        faces.push_back({{"chain", ns.to_short_string()}, {"codim", c}, {"vertices", real.face_vertices(ns)}});
      }
    print_json({{"n", n}, {"vertices", real.vertices}, {"faces", faces}});
    return 0;
  }
  if (format != "off") throw InputError("format must be json or off");
  if (n != 2 && n != 3) throw InputError("OFF export supports n = 2 and n = 3");
  std::vector<Vec> pts;
  for (const auto& v : real.vertices) {
    Vec y = helmert(v);
    y.resize(3, 0.0);
    pts.push_back(std::move(y));
  }
  std::vector<std::vector<std::size_t>> polys;
  if (n == 2) {
    std::vector<std::size_t> all(pts.size());
    std::iota(all.begin(), all.end(), 0);
    polys.push_back(cyclic(pts, all));
  } else {
    for (const auto& ns : enumerate_faces(3, 1)) polys.push_back(cyclic(pts, real.face_vertices(ns)));
  }
  const std::size_t edges = enumerate_faces(n, n - 1).size();
  std::cout << "OFF\n" << pts.size() << ' ' << polys.size() << ' ' << edges << '\n';
  for (const auto& p : pts) std::cout << fixed(p[0]) << ' ' << fixed(p[1]) << ' ' << fixed(p[2]) << '\n';
  for (const auto& poly : polys) {
    std::cout << poly.size();
    for (auto i : poly) std::cout << ' ' << i;
    std::cout << '\n';
  }
  return 0;
}

// ---- render ---------------------------------------------------------------

int run_render(const Source& src, const std::string& form_file, const std::string& out) {
  if (src.preset == "cp2-cp2bar") {
    const DecompositionData d = decomposition_preset("cp2-cp2bar");
    render::render_lattice_lines(d.ambient, {limit_period_subspace(d)}, "cp2-cp2bar", out);
    return 0;
  }
  if (src.preset == "s2xs2") {
    const DecompositionData a = decomposition_preset("s2xs2-s1xs2"), b = decomposition_preset("s2xs2-s2xs1");
    render::render_lattice_lines(a.ambient, {limit_period_subspace(a), limit_period_subspace(b)}, "s2xs2", out);
    return 0;
  }
  if (!form_file.empty()) {
    if (!src.preset.empty() || !src.config.empty()) throw InputError("--form cannot be combined with --preset/--config");
    render::render_lattice_lines(io::form_from_json(io::read_json_file(form_file)), {}, form_file, out);
    return 0;
  }
  std::string title = src.preset.empty() ? src.config : src.preset;
  if (src.preset == "symmetric" && !src.a.empty()) title += " a=" + src.a;
  render::render_config(load_config(src), title, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodmap: bilinear forms, face constraints, systoles and disk pictures"};
  app.require_subcommand(1);
  bool as_json = false;

  Source classify_src;
  std::string span;
  auto* classify = app.add_subcommand("classify", "Classify the span of vectors in a (1,n) form");
  add_source(classify, classify_src);
  classify->add_option("--span", span, "Rows p/q,...;... spanning the subspace")->required();
  classify->add_flag("--json", as_json, "Machine-readable output");

  Source faces_src;
  std::string chain;
  auto* faces = app.add_subcommand("faces", "Face constraints of a configuration");
  add_source(faces, faces_src);
  faces->add_option("--chain", chain, "Single face, e.g. \"1;1,2\"");
  faces->add_flag("--json", as_json, "Machine-readable output");

  Source simplex_src;
  auto* simplex = app.add_subcommand("simplex", "Vertices of the simplex bounded by the walls");
  add_source(simplex, simplex_src);
  simplex->add_flag("--json", as_json, "Machine-readable output");

  std::string limit_config, limit_preset;
  auto* limit = app.add_subcommand("limit", "Limiting period subspace of a decomposition");
  limit->add_option("--config", limit_config, "Decomposition JSON file");
  limit->add_option("--preset", limit_preset, "cp2-cp2bar, s2xs2-s1xs2 or s2xs2-s2xs1");
  limit->add_flag("--json", as_json, "Machine-readable output");

  Source systole_src;
  SystoleArgs sargs;
  auto* systole = app.add_subcommand("systole", "Conformal systole at a period point, or its supremum");
  add_source(systole, systole_src);
  systole->add_option("--period", sargs.period, "Rows spanning a maximal positive subspace");
  systole->add_flag("--sup", sargs.sup, "Search for the supremum over period points (b+ = 1)");
  systole->add_option("--grid", sargs.grid, "Coarse grid spacing in the disk");
  systole->add_option("--refine", sargs.refine, "Refinement tolerance (hyperbolic length)");
  systole->add_option("--bound", sargs.bound, "Lattice coordinate box");
  systole->add_flag("--json", as_json, "Machine-readable output");

  auto* perm = app.add_subcommand("permutahedron", "Permutahedron combinatorics");
  perm->require_subcommand(1);
  int export_n = 2;
  std::string export_format = "json";
  auto* exp = perm->add_subcommand("export", "Vertices and face lattice");
  exp->add_option("--n", export_n, "Dimension")->required();
  exp->add_option("--format", export_format, "json or off")->check(CLI::IsMember({"json", "off"}));

  Source render_src;
  std::string render_out = "-", render_form;
  auto* rend = app.add_subcommand("render", "SVG picture of a configuration or a lattice");
  add_source(rend, render_src);
  rend->add_option("--form", render_form, "Rank-2 form JSON: lattice picture");
  rend->add_option("-o,--output", render_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*classify) return run_classify(classify_src, span, as_json);
    if (*faces) return run_faces(faces_src, chain, as_json);
    if (*simplex) return run_simplex(simplex_src, as_json);
    if (*limit) return run_limit(limit_config, limit_preset, as_json);
    if (*systole) return run_systole(systole_src, sargs, as_json);
    if (*exp) return run_export(export_n, export_format);
    if (*rend) return run_render(render_src, render_form, render_out);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

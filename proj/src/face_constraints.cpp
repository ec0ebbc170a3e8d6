#include "periodmap/face_constraints.hpp"

#include <cmath>
#include <limits>

#include "periodmap/errors.hpp"

namespace periodmap {

SurfaceConfig make_config(FormPtr form, RMatrix vectors) {
  if (!form) throw InputError("configuration without a form");
  if (vectors.size() < 2) throw InputError("configuration needs at least two vectors");
  if (vectors.size() > 32) throw InputError("configuration has too many vectors");
  for (const auto& v : vectors) {
    if (v.size() != form->dim()) throw InputError("configuration vector length does not match the form");
    if (is_zero(v)) throw InputError("configuration contains the zero vector");
  }
  return SurfaceConfig{std::move(form), std::move(vectors)};
}

bool SurfaceConfig::independent() const { return rank(vectors, form->dim()) == vectors.size(); }

Subspace SurfaceConfig::span(Subset I) const {
  RMatrix gens;
  for (int i : I.elements()) {
    if (i > static_cast<int>(vectors.size())) throw InputError("subset element beyond the configuration");
    gens.push_back(vectors[static_cast<std::size_t>(i - 1)]);
  }
  return Subspace(form, gens);
}

namespace {

void require_matching(const SurfaceConfig& cfg, const NestedSequence& ns) {
  if (ns.n() != cfg.n()) {
    throw InputError("chain is for n = " + std::to_string(ns.n()) + " but the configuration has n = " +
                     std::to_string(cfg.n()));
  }
}

// V_{I_0}, ..., V_{I_{l+1}} with V_{I_{l+1}} the whole ambient space.
std::vector<Subspace> chain_spans(const SurfaceConfig& cfg, const NestedSequence& ns) {
  std::vector<Subspace> V{Subspace::zero(cfg.form)};
  for (Subset s : ns.chain()) V.push_back(cfg.span(s));
  V.push_back(Subspace::whole(cfg.form));
  return V;
}

std::vector<Subspace> chain_nulls(const std::vector<Subspace>& V) {
  std::vector<Subspace> N{Subspace::zero(V.front().ambient())};
  for (std::size_t i = 1; i < V.size(); ++i) N.push_back(nullspace(V[i]));
  return N;
}

void require_bplus_one(const GramForm& form) {
  const Signature s = signature(form);
  if (s.plus != 1 || s.null != 0) {
    throw PreconditionError("b+ = 1 summary needs ambient signature (1,n), got " + to_string(s));
  }
}

}  // namespace

FaceConstraint constraint_for_face(const SurfaceConfig& cfg, const NestedSequence& ns) {
  require_matching(cfg, ns);
  std::vector<Subspace> V = chain_spans(cfg, ns);
  std::vector<Subspace> N = chain_nulls(V);
  std::vector<FacePiece> pieces;
  for (std::size_t i = 1; i < V.size(); ++i) {
    Subspace P = intersect(V[i], orth_complement(V[i - 1]));
    Signature sig = signature(P);
    Subspace hplus = max_positive_subspace(P);
    pieces.push_back({std::move(P), sig, std::move(hplus)});
  }

  Subspace witness = Subspace::zero(cfg.form);
  for (const auto& p : pieces) witness = sum(witness, p.Hplus);
  for (std::size_t i = 1; i + 1 < N.size(); ++i) witness = sum(witness, N[i]);
  const Signature wsig = signature(witness);

  const Signature amb = signature(*cfg.form);
  std::optional<ConstraintSet> summary;
  if (amb.plus == 1 && amb.null == 0) {
    summary = bplus1_summary(cfg, ns);
  } else {
    std::size_t dim = 0;
    for (const auto& p : pieces) dim += p.sig.plus * p.sig.minus;
    summary = ConstraintSet{ConstraintKind::ProductGrassmannian, witness.basis(), witness, dim};
  }
  return FaceConstraint{ns, std::move(V), std::move(pieces), std::move(N), std::move(witness), wsig,
                        std::move(*summary)};
}

DimensionIdentity dimension_identity(const SurfaceConfig& cfg, const NestedSequence& ns) {
  require_matching(cfg, ns);
  const std::vector<Subspace> V = chain_spans(cfg, ns);
  const std::vector<Subspace> N = chain_nulls(V);
  DimensionIdentity d;
  d.lhs = static_cast<long>(signature(*cfg.form).plus);
  for (std::size_t i = 1; i < V.size(); ++i) {
    const Subspace P = intersect(V[i], orth_complement(V[i - 1]));
    d.rhs += static_cast<long>(signature(P).plus);
    d.rhs += static_cast<long>(N[i - 1].dim()) - static_cast<long>(intersect(N[i - 1], N[i]).dim());
  }
  // N_k cap N_{k+1} = N_k cap (N_{k+1} + ... + N_l)
  const std::size_t l = ns.length();
  for (std::size_t k = 1; k < l; ++k) {
    Subspace tail = Subspace::zero(cfg.form);
    for (std::size_t i = k + 1; i <= l; ++i) tail = sum(tail, N[i]);
    if (!(intersect(N[k], N[k + 1]) == intersect(N[k], tail))) d.nesting_ok = false;
  }
  return d;
}

bool check_dimension_identity(const SurfaceConfig& cfg, const NestedSequence& ns) {
  return dimension_identity(cfg, ns).holds();
}

std::optional<std::size_t> iplus(const SurfaceConfig& cfg, const NestedSequence& ns) {
  require_matching(cfg, ns);
  for (std::size_t j = 1; j <= ns.length(); ++j)
    if (!signature(cfg.span(ns.at(j))).negative_definite()) return j;
  return std::nullopt;
}

ConstraintSet bplus1_summary(const SurfaceConfig& cfg, const NestedSequence& ns) {
  require_matching(cfg, ns);
  require_bplus_one(*cfg.form);
  const auto ip = iplus(cfg, ns);
  if (!ip) return classify_span(cfg.span(ns.last()));
  const Subspace v_plus = cfg.span(ns.at(*ip));
  const Subspace nul = nullspace(v_plus);
  if (!nul.is_zero()) {
    RMatrix gen{primitive_integer(nul.basis().front())};
    return ConstraintSet{ConstraintKind::IdealPoint, gen, nul, 0};
  }
  const Subspace prev = cfg.span(ns.at(*ip - 1));
  return classify_span(intersect(v_plus, orth_complement(prev)));
}

SimplexVertices simplex_from_walls(const SurfaceConfig& cfg) {
  const Signature amb = signature(*cfg.form);
  if (amb.plus != 1 || amb.null != 0) throw PreconditionError("simplex needs ambient signature (1,n)");
  const std::size_t m = cfg.vectors.size();
  if (m != cfg.form->dim()) throw InputError("simplex needs n+1 vectors in an (n+1)-dimensional ambient");
  const StandardEmbedding emb = standard_embedding(cfg.form);
  const Subset all = Subset::full(static_cast<int>(m));

  SimplexVertices out;
  for (std::size_t i = 0; i < m; ++i) {
    const Subset I(all.bits() & ~(1u << i));
    const Subspace VI = cfg.span(I);
    if (!signature(VI).negative_definite()) {
      throw PreconditionError("V_I is not negative definite for I = " + I.to_string());
    }
    const Subspace perp = orth_complement(VI);
    if (perp.dim() != 1) throw DegenerateSimplexError("walls other than " + std::to_string(i + 1) + " do not meet in a point");
    RVector d = primitive_integer(perp.basis().front());
    if (emb.to_standard(d)[0] < 0) d = scale(-1, d);
    out.norms.push_back(cfg.form->evaluate(d, d));
    out.vertices.push_back(line_to_hpoint(emb, d));
    out.directions.push_back(std::move(d));
  }
  if (rank(out.directions, cfg.form->dim()) != m) {
    throw DegenerateSimplexError("simplex vertices are linearly dependent");
  }
  return out;
}

bool is_bounded_config(const SurfaceConfig& cfg) {
  const std::size_t m = cfg.vectors.size();
  const Subset all = Subset::full(static_cast<int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (!signature(cfg.span(Subset(all.bits() & ~(1u << i)))).negative_definite()) return false;
  }
  return true;
}

long product_codim(const SurfaceConfig& cfg, const NestedSequence& ns) {
  require_matching(cfg, ns);
  const std::vector<Subspace> V = chain_spans(cfg, ns);
  for (std::size_t i = 1; i + 1 < V.size(); ++i) {
    if (!signature(V[i]).nondegenerate()) {
      throw PreconditionError("V_I is degenerate for I = " + ns.at(i).to_string());
    }
  }
  const Signature amb = signature(*cfg.form);
  long codim = static_cast<long>(amb.plus * amb.minus);
  for (std::size_t i = 1; i < V.size(); ++i) {
    const Signature s = signature(intersect(V[i], orth_complement(V[i - 1])));
    codim -= static_cast<long>(s.plus * s.minus);
  }
  return codim;
}

HPoint retract_to_simplex(const SurfaceConfig& cfg, const HPoint& p) {
  if (cfg.n() != 2) throw InputError("retraction is implemented for n = 2 only");
  const SimplexVertices sv = simplex_from_walls(cfg);
  const StandardEmbedding emb = standard_embedding(cfg.form);
  std::vector<Vec> walls;
  std::vector<double> side;
  for (std::size_t i = 0; i < cfg.vectors.size(); ++i) {
    walls.push_back(emb.to_standard(cfg.vectors[i]));
    side.push_back(minkowski_dot(sv.vertices[i].coords(), walls[i]) > 0 ? 1.0 : -1.0);
  }
  auto inside = [&](const Vec& x, std::size_t skip) {
    for (std::size_t i = 0; i < walls.size(); ++i)
      if (i != skip && side[i] * minkowski_dot(x, walls[i]) < -1e-12) return false;
    return true;
  };
  if (inside(p.coords(), walls.size())) return p;

  std::vector<HPoint> candidates(sv.vertices.begin(), sv.vertices.end());
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const Vec& w = walls[i];
    const double t = minkowski_dot(p.coords(), w) / minkowski_dot(w, w);
    Vec foot(p.coords());
    for (std::size_t k = 0; k < foot.size(); ++k) foot[k] -= t * w[k];
    const HPoint q = line_to_hpoint(foot);
    if (inside(q.coords(), i)) candidates.push_back(q);
  }
  const HPoint* best = &candidates.front();
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) {
    const double d = hyperbolic_distance(p, c);
    if (d < best_d) {
      best_d = d;
      best = &c;
    }
  }
  return *best;
}

double enclosed_klein_area(const SurfaceConfig& cfg) {
  if (cfg.n() != 2) throw InputError("enclosure test is defined for n = 2");
  const StandardEmbedding emb = standard_embedding(cfg.form);
  const char* cycle[] = {"1;1,2", "2;1,2", "2;2,3", "3;2,3", "3;1,3", "1;1,3"};
  std::vector<Vec> pts;
  for (const char* c : cycle) {
    const ConstraintSet cs = bplus1_summary(cfg, NestedSequence::parse(2, c));
    if (cs.locus_dim != 0 || cs.locus.dim() != 1) continue;
    const Vec x = emb.to_standard(cs.locus.basis().front());
    pts.push_back({x[1] / x[0], x[2] / x[0]});
  }
  double area = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec& a = pts[i];
    const Vec& b = pts[(i + 1) % pts.size()];
    area += a[0] * b[1] - a[1] * b[0];
  }
  return std::abs(area) / 2;
}

}  // namespace periodmap

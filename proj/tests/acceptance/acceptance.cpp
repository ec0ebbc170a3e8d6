// Acceptance harness: one PASS/FAIL line per criterion. Run with
// --criterion N for a single one (that is how ctest invokes it).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "periodmap/decomposition.hpp"
#include "periodmap/errors.hpp"
#include "periodmap/face_constraints.hpp"
#include "periodmap/permutahedron.hpp"
#include "periodmap/presets.hpp"
#include "periodmap/render.hpp"
#include "periodmap/systole.hpp"

using namespace periodmap;

namespace {

// ---- pinned tolerances and budgets ----------------------------------------

constexpr double kIdentityTol = 1e-9;        // criterion 5, F o i = id
constexpr double kCoverageStep = 0.01;       // criterion 6 grid spacing
constexpr double kSystoleFloatTol = 1e-10;   // criterion 9, float period points
constexpr double kOptimumLocationTol = 1e-4; // criterion 9, argmax location
constexpr double kOrthogonalityTol = 1e-6;   // criterion 10, arcs vs boundary
constexpr long kBruteBox = 25;               // criterion 9 oracle box

constexpr double kBudget1 = 1, kBudget2 = 10, kBudget3 = 30, kBudget6 = 60, kBudget9 = 120;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string num(double x, int digits = 3) {
  std::ostringstream o;
  o << std::setprecision(digits) << x;
  return o.str();
}

oracle::QMat to_oracle(const RMatrix& m) { return m; }

oracle::Sig to_oracle(const Signature& s) {
  return {static_cast<int>(s.plus), static_cast<int>(s.minus), static_cast<int>(s.null)};
}

RMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  RMatrix u = identity_matrix(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    const int c = coef(rng);
    if (i == j || c == 0) continue;
    for (std::size_t r = 0; r < n; ++r) u[r][j] += c * u[r][i];  // column op keeps det = 1
  }
  return u;
}

// ---- 1 ----------------------------------------------------------------------

Outcome criterion1() {
  Outcome out;
  Stopwatch sw;
  for (const char* a : {"3/2", "2", "5/2", "3"}) {
    const Rational q = parse_rational(a);
    const bool got = is_bounded_config(symmetric_family(q));
    const bool want = oracle::symmetric_bounded(q);
    out.check(got == want && want == (q > 2), std::string("a=") + a + " bounded=" + (got ? "true" : "false"));
  }
  out.check(sw.seconds() < kBudget1, "time " + num(sw.seconds()) + " s < 1 s");
  return out;
}

// ---- 2 ----------------------------------------------------------------------

Outcome criterion2() {
  Outcome out;
  Stopwatch sw;
  int good = 0, oracle_good = 0, complement_good = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const FuzzCase fc = random_decomposition(seed, 8);
    const DecompositionData& d = fc.data;
    if (validate(d).ok() && check_betti_identity(d) && check_bpm_identity(d)) ++good;

    const oracle::Sig amb = oracle::signature(to_oracle(d.ambient->gram()));
    const oracle::Sig s1 = oracle::signature(oracle::restricted(d.ambient->gram(), d.H1.basis()));
    const oracle::Sig s2 = oracle::signature(oracle::restricted(d.ambient->gram(), d.H2.basis()));
    const int k = static_cast<int>(d.D.dim());
    const bool betti = d.ambient->dim() == d.bhat1 + d.bhat2 + 2 * d.D.dim();
    if (betti && amb.plus == s1.plus + s2.plus + k && amb.minus == s1.minus + s2.minus + k) ++oracle_good;

    const HyperbolicComplement hc = hyperbolic_complement(d);
    RMatrix basis = d.D.basis();
    for (const auto& w : hc.duals) basis.push_back(w);
    const oracle::QMat pm = oracle::restricted(d.ambient->gram(), basis);
    bool hyperbolic = true;
    for (int i = 0; i < 2 * k; ++i)
      for (int j = 0; j < 2 * k; ++j) hyperbolic = hyperbolic && pm[i][j] == ((i - j == k || j - i == k) ? 1 : 0);
    if (hyperbolic) ++complement_good;
  }
  out.check(good == 200, std::to_string(good) + "/200 valid with both identities (library)");
  out.check(oracle_good == 200, std::to_string(oracle_good) + "/200 identities via characteristic-polynomial signatures");
  out.check(complement_good == 200, std::to_string(complement_good) + "/200 complements pair as hyperbolic planes");
  out.check(sw.seconds() < kBudget2, "time " + num(sw.seconds()) + " s < 10 s");
  return out;
}

// ---- 3 ----------------------------------------------------------------------

SurfaceConfig random_config(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> mag(1, 3), entry(-3, 3);
  RVector diag{Rational(mag(rng))};
  for (std::size_t i = 1; i < dim; ++i) diag.emplace_back(-mag(rng));
  const RMatrix u = random_unimodular(rng, dim, 6);
  const RMatrix g = multiply(multiply(transpose(u), diagonal_matrix(diag)), u);
  RMatrix vs;
  for (std::size_t i = 0; i < dim; ++i) {
    RVector v(dim);
    do {
      for (auto& c : v) c = entry(rng);
    } while (is_zero(v));
    vs.push_back(std::move(v));
  }
  return make_config(make_form(g), vs);
}

NestedSequence random_chain(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n + 1));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Subset> chain;
  std::bernoulli_distribution cut(0.5);
  std::vector<int> acc;
  for (int k = 0; k < n; ++k) {
    acc.push_back(perm[static_cast<std::size_t>(k)]);
    if (cut(rng) || (chain.empty() && k == n - 1)) chain.push_back(Subset::of(acc));
  }
  return NestedSequence(n, chain);
}

Outcome criterion3() {
  Outcome out;
  Stopwatch sw;
  std::mt19937_64 rng(0xc3);
  int configs = 0, faces = 0, held = 0, oracle_ok = 0;
  for (int c = 0; c < 200; ++c) {
    const std::size_t dim = 3 + static_cast<std::size_t>(c % 3);  // (1,2), (1,3), (1,4)
    const SurfaceConfig cfg = random_config(rng, dim);
    ++configs;
    std::vector<NestedSequence> chains;
    if (dim == 3) {
      for (int k = 1; k <= 2; ++k)
        for (auto& ns : enumerate_faces(2, k)) chains.push_back(ns);
    } else {
      for (int k = 0; k < 10; ++k) chains.push_back(random_chain(rng, cfg.n()));
    }
    const oracle::Sig amb = oracle::signature(to_oracle(cfg.form->gram()));
    for (const auto& ns : chains) {
      ++faces;
      if (check_dimension_identity(cfg, ns)) ++held;
      const DimensionIdentity id = dimension_identity(cfg, ns);
      const FaceConstraint fc = constraint_for_face(cfg, ns);
      bool pieces_ok = id.lhs == amb.plus;
      for (const auto& p : fc.pieces) {
        pieces_ok = pieces_ok && oracle::signature(oracle::restricted(cfg.form->gram(), p.P.basis())) == to_oracle(p.sig);
      }
      if (pieces_ok) ++oracle_ok;
    }
  }
  out.check(held == faces, std::to_string(held) + "/" + std::to_string(faces) + " faces satisfy the identity over " +
                               std::to_string(configs) + " configs");
  out.check(oracle_ok == faces, std::to_string(oracle_ok) + "/" + std::to_string(faces) +
                                    " faces with b+ and piece signatures confirmed by the oracle");
  out.check(sw.seconds() < kBudget3, "time " + num(sw.seconds()) + " s < 30 s");
  return out;
}

// ---- 4 ----------------------------------------------------------------------

Outcome criterion4() {
  Outcome out;
  const auto expect = [&](const char* name, const RMatrix& axis) {
    const DecompositionData d = decomposition_preset(name);
    const Subspace limit = limit_period_subspace(d);
    const Subspace want(d.ambient, axis);
    out.check(limit == want, std::string(name) + " -> " + to_string(limit.basis().front()));
  };
  expect("cp2-cp2bar", {{0, 1}});
  expect("s2xs2-s1xs2", {{0, 1}});
  expect("s2xs2-s2xs1", {{1, 0}});
  return out;
}

// ---- 5 ----------------------------------------------------------------------

Outcome criterion5() {
  Outcome out;
  const std::vector<std::pair<int, std::vector<long>>> counts{{2, {6, 6}}, {3, {14, 36, 24}}};
  for (const auto& [n, want] : counts) {
    std::string got;
    bool ok = true;
    for (int c = 1; c <= n; ++c) {
      const long k = static_cast<long>(enumerate_faces(n, c).size());
      got += (c > 1 ? "," : "") + std::to_string(k);
      ok = ok && k == want[static_cast<std::size_t>(c - 1)] && k == oracle::chain_count(n + 1, c);
    }
    out.check(ok, "P" + std::to_string(n) + " face counts (" + got + ")");
  }

  // F o i on sampled boundary points of the simplex.
  std::mt19937_64 rng(0xb0);
  for (int n = 1; n <= 3; ++n) {
    const PermRealization real = realize(n);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_int_distribution<int> facet(0, n);
    double worst = 0;
    Vec worst_x;
    for (int s = 0; s < 1000; ++s) {
      Vec lam(static_cast<std::size_t>(n + 1));
      double total = 0;
      for (auto& l : lam) total += (l = expo(rng));
      lam[static_cast<std::size_t>(facet(rng))] = 0;
      total = 0;
      for (double l : lam) total += l;
      for (auto& l : lam) l /= total;
      const Vec x = from_barycentric(lam, n);
      const Vec back = forgetful_map(closest_point_map(x, real), n);
      double d = 0;
      for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(back[i] - x[i]));
      if (d > worst) {
        worst = d;
        worst_x = x;
      }
    }
    std::string where;
    for (double c : worst_x) where += (where.empty() ? "" : ",") + num(c, 4);
    out.check(worst <= kIdentityTol, "n=" + std::to_string(n) + " max |F(i(x)) - x| = " + num(worst) +
                                         (worst_x.empty() ? "" : " at x=(" + where + ")"));
  }
  return out;
}

// ---- 6 ----------------------------------------------------------------------

Vec perturb(const Vec& lam, int k) {
  const double prod = lam[0] * lam[1] * lam[2];
  Vec d;
  double c = 1;
  switch (k) {
    case 0: d = {1, -1, 0}, c = 2; break;
    case 1: d = {-1, -1, 2}, c = 1.2; break;
    case 2: {
      const double s = std::sin(7 * lam[0]);
      d = {2 * s, -s, -s};
      break;
    }
    case 3: d = {lam[0] - 1.0 / 3, lam[1] - 1.0 / 3, lam[2] - 1.0 / 3}, c = 5; break;
    default: return perturb(perturb(lam, 0), 1);
  }
  Vec out(3);
  for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + c * prod * d[static_cast<std::size_t>(i)];
  return out;
}

Outcome criterion6() {
  Outcome out;
  Stopwatch sw;
  const int n = 2;
  const PolytopeMap forget = [](const Vec& x) { return forgetful_map(x, 2); };
  const CoverageReport base = check_face_mapping_surjectivity(forget, n, kCoverageStep);
  out.check(base.ok(), "F covers the grid (" + std::to_string(base.grid_points) + " points, worst gap " +
                           num(base.worst_gap) + ")");
  for (int k = 0; k < 5; ++k) {
    const PolytopeMap f = [k](const Vec& x) { return from_barycentric(perturb(to_barycentric(forgetful_map(x, 2), 2), k), 2); };
    const CoverageReport r = check_face_mapping_surjectivity(f, n, kCoverageStep);
    out.check(r.ok(), "perturbation " + std::to_string(k + 1) + " covers (worst gap " + num(r.worst_gap) + ")");
  }
  const PolytopeMap shrink = [](const Vec& x) {
    Vec lam = to_barycentric(forgetful_map(x, 2), 2);
    for (auto& l : lam) l = 0.5 * l + 0.5 / 3;
    return from_barycentric(lam, 2);
  };
  const CoverageReport bad = check_face_mapping_surjectivity(shrink, n, kCoverageStep);
  std::string w;
  if (bad.uncovered_witness)
    for (double c : *bad.uncovered_witness) w += (w.empty() ? "" : ",") + num(c, 3);
  out.check(!bad.face_condition_ok && bad.violating_face && bad.uncovered_witness,
            "violating map rejected (face " + (bad.violating_face ? bad.violating_face->to_string() : std::string("-")) +
                ", uncovered (" + w + "))");
  out.check(sw.seconds() < kBudget6, "time " + num(sw.seconds()) + " s < 60 s");
  return out;
}

// ---- 7 ----------------------------------------------------------------------

Outcome criterion7() {
  Outcome out;
  std::ifstream in(std::string(PERIODMAP_GOLDEN_DIR) + "/fig6_summaries.json");
  if (!in) {
    out.check(false, "golden fig6_summaries.json missing");
    return out;
  }
  const nlohmann::json golden = nlohmann::json::parse(in);
  for (const char* preset : {"fig6-i", "fig6-ii", "fig6-iii", "fig6-iv", "degenerate"}) {
    const SurfaceConfig cfg = preset_config(preset);
    int faces = 0, agree = 0;
    for (int c = 1; c <= 2; ++c)
      for (const auto& ns : enumerate_faces(2, c)) {
        ++faces;
        std::vector<std::vector<int>> chain;
        for (Subset s : ns.chain()) {
          std::vector<int> idx;
          for (int e : s.elements()) idx.push_back(e - 1);
          chain.push_back(idx);
        }
        const std::string lib = to_string(bplus1_summary(cfg, ns).kind);
        const std::string orc = oracle::bplus1_kind(to_oracle(cfg.form->gram()), to_oracle(cfg.vectors), chain);
        const auto& g = golden.at(preset).at(ns.to_short_string());
        if (lib == orc && lib == g.get<std::string>()) ++agree;
      }
    out.check(agree == 12 && faces == 12, std::string(preset) + ": " + std::to_string(agree) + "/12 faces agree");
  }
  return out;
}

// ---- 8 ----------------------------------------------------------------------

Outcome criterion8() {
  Outcome out;
  std::mt19937_64 rng(0x7ab1e);
  std::uniform_int_distribution<int> entry(-4, 4);
  const std::vector<FormPtr> forms{make_diagonal_form({1, -1, -1}), make_diagonal_form({1, -1, -1, -1}),
                                   make_form({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}})};
  struct Row {
    const char* condition;
    std::size_t size;
    std::function<bool(const oracle::Sig&)> holds;
    ConstraintKind expect;
  };
  const std::vector<Row> rows{
      {"v.v < 0", 1, [](const oracle::Sig& s) { return s.minus == 1; }, ConstraintKind::Geodesic},
      {"v.v = 0", 1, [](const oracle::Sig& s) { return s.null == 1; }, ConstraintKind::IdealPoint},
      {"v.v > 0", 1, [](const oracle::Sig& s) { return s.plus == 1; }, ConstraintKind::Point},
      {"<vi,vj> negative definite", 2, [](const oracle::Sig& s) { return s.minus == 2; }, ConstraintKind::Geodesic},
      {"<vi,vj> degenerate", 2, [](const oracle::Sig& s) { return s.null == 1 && s.plus == 0; }, ConstraintKind::IdealPoint},
      {"<vi,vj> indefinite", 2, [](const oracle::Sig& s) { return s.plus == 1 && s.minus == 1; }, ConstraintKind::Point},
  };
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const Row& row = rows[ri];
    const bool null_row = ri == 1 || ri == 4;
    int witnesses = 0, agree = 0;
    for (const auto& form : forms) {
      const std::size_t n = form->dim();
      int found = 0;
      for (int attempt = 0; attempt < 200000 && found < 10; ++attempt) {
        RMatrix vs;
        if (null_row) {
          // Null vectors are rare at random: take w.w = 0 from a kernel
          // solve, then (for pairs) a second vector orthogonal to it.
          RVector a(n);
          for (auto& c : a) c = entry(rng);
          RVector b(n);
          for (auto& c : b) c = entry(rng);
          // Null combination a + t b: Q(b,b) t^2 + 2 Q(a,b) t + Q(a,a) = 0 with rational t.
          const Rational qa = form->evaluate(a, a), qab = form->evaluate(a, b), qb = form->evaluate(b, b);
          if (sgn(qb) == 0) continue;
          const Rational disc = qab * qab - qa * qb;
          if (sgn(disc) < 0) continue;
          const mpz_class num = disc.get_num(), den = disc.get_den();
          if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) continue;
          const Rational root(sqrt(num), sqrt(den));
          const RVector v = primitive_integer(axpy(a, (-qab + root) / qb, b));
          if (is_zero(v)) continue;
          vs.push_back(v);
          if (row.size == 2) {
            RVector w(n);
            for (auto& c : w) c = entry(rng);
            // Project w onto v^perp along a vector with Q(v, .) != 0.
            RVector e;
            for (std::size_t i = 0; i < n && e.empty(); ++i)
              if (sgn(form->evaluate(v, unit_vector(n, i))) != 0) e = unit_vector(n, i);
            w = axpy(w, -form->evaluate(v, w) / form->evaluate(v, e), e);
            vs.push_back(primitive_integer(w));
          }
        } else {
          for (std::size_t k = 0; k < row.size; ++k) {
            RVector v(n);
            for (auto& c : v) c = entry(rng);
            vs.push_back(v);
          }
        }
        if (oracle::rank(vs) != row.size) continue;
        const oracle::Sig s = oracle::span_signature(form->gram(), vs);
        if (!row.holds(s)) continue;
        ++found;
        ++witnesses;
        if (classify_span(Subspace(form, vs)).kind == row.expect) ++agree;
      }
    }
    out.check(witnesses >= 20 && agree == witnesses, std::string(row.condition) + " -> " + to_string(row.expect) + " (" +
                                                         std::to_string(agree) + "/" + std::to_string(witnesses) + ")");
  }
  return out;
}

// ---- 9 ----------------------------------------------------------------------

std::vector<std::vector<long>> integer_gram(const FormPtr& f) {
  std::vector<std::vector<long>> g;
  for (const auto& row : f->gram()) {
    std::vector<long> r;
    for (const auto& c : row) r.push_back(c.get_num().get_si());
    g.push_back(r);
  }
  return g;
}

// Parameter t of a period point on the one-parameter families used by the
// scan oracle (ambient unit vector u).
double family_parameter(const FormPtr& form, const Vec& u) {
  if (form->gram()[0][1] == 0) return std::asinh(u[1]);  // u = (cosh t, sinh t)
  return std::log(u[0] * std::sqrt(2.0));                 // u = (e^t, e^-t)/sqrt2
}

Outcome criterion9() {
  Outcome out;
  Stopwatch sw;
  std::mt19937_64 rng(0x5e5);
  const std::vector<std::vector<FormPtr>> by_signature{
      {make_diagonal_form({1, -1}), make_form({{0, 1}, {1, 0}}), make_form({{2, 1}, {1, -1}})},
      {make_diagonal_form({1, -1, -1}), make_form({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}), make_diagonal_form({2, -1, -3})}};

  for (const auto& forms : by_signature) {
    const std::string sig = forms.front()->dim() == 2 ? "(1,1)" : "(1,2)";
    int exact_ok = 0, float_ok = 0;
    double worst_float = 0;
    std::uniform_int_distribution<long> entry(-4, 4);
    std::uniform_real_distribution<double> unit(-1, 1);
    for (int k = 0; k < 50; ++k) {
      const FormPtr form = forms[static_cast<std::size_t>(k) % forms.size()];
      const std::size_t n = form->dim();
      const auto g = integer_gram(form);

      // Rational period point: a random positive integer line.
      std::vector<long> h(n);
      RVector hq(n);
      do {
        for (std::size_t i = 0; i < n; ++i) hq[i] = h[i] = entry(rng);
      } while (sgn(form->evaluate(hq, hq)) <= 0);
      const SystoleResult r = conf_systole(PeriodPoint::exact(Subspace(form, {hq})), 64);
      const oracle::ExactMin m = oracle::exact_min(g, h, kBruteBox);
      if (r.certified && r.value_squared && *r.value_squared == m.value_squared && r.minimizers == m.minimizers) ++exact_ok;

      // Float period point: a random point of the disk patch |z| <= 0.8.
      const StandardEmbedding emb = standard_embedding(form);
      Vec z(n - 1);
      double r2;
      do {
        r2 = 0;
        for (auto& c : z) {
          c = 0.8 * unit(rng);
          r2 += c * c;
        }
      } while (r2 > 0.64);
      const HPoint p = from_poincare_disk(z);
      const Vec u = emb.from_standard(p.coords());
      std::vector<std::vector<double>> gd;
      for (const auto& row : g) gd.emplace_back(row.begin(), row.end());
      const double want = oracle::float_min(gd, u, kBruteBox);
      const SystoleResult rf = conf_systole(PeriodPoint::from_hpoint(form, p), 64);
      worst_float = std::max(worst_float, std::abs(rf.value - want));
      if (rf.certified && std::abs(rf.value - want) <= kSystoleFloatTol) ++float_ok;
    }
    out.check(exact_ok == 50, sig + " exact period points: " + std::to_string(exact_ok) + "/50 match brute force exactly");
    out.check(float_ok == 50, sig + " float period points: " + std::to_string(float_ok) + "/50 within 1e-10 (worst " +
                                  num(worst_float) + ")");
  }

  // Supremum search against the one-parameter scan oracle.
  const std::vector<std::pair<std::string, FormPtr>> sups{{"diag(1,-1)", make_diagonal_form({1, -1})},
                                                          {"hyperbolic plane", make_form({{0, 1}, {1, 0}})}};
  for (const auto& [name, form] : sups) {
    const oracle::ScanResult scan = name == "hyperbolic plane" ? oracle::scan_max(oracle::conf_hyperbolic)
                                                               : oracle::scan_max(oracle::conf_diag);
    const CsResult cs = cs_supremum(form);
    const double t = family_parameter(form, standard_embedding(form).from_standard(cs.point.coords()));
    double dist = 1e300;
    for (double s : scan.argmax) dist = std::min(dist, std::abs(s - t));
    std::string args;
    for (double s : scan.argmax) args += (args.empty() ? "" : ", ") + num(s, 6);
    out.check(std::abs(cs.value - scan.value) < 2 * CsSearch{}.refine,
              name + ": CS " + num(cs.value, 10) + " vs scan " + num(scan.value, 10));
    out.check(dist < kOptimumLocationTol, name + ": search optimum t=" + num(t, 6) + " matches scan argmax {" + args + "}");
    bool at_zero = false;
    for (double s : scan.argmax) at_zero = at_zero || std::abs(s) < kOptimumLocationTol;
    out.check(at_zero && scan.argmax.size() == 1, name + ": optimum at the symmetric point t=0 (scan argmax {" + args + "})");
  }

  // Invariance under unimodular conjugation.
  int invariant = 0;
  std::mt19937_64 urng(0x1c0);
  for (int k = 0; k < 10; ++k) {
    const FormPtr a = sups[static_cast<std::size_t>(k % 2)].second;
    const RMatrix u = random_unimodular(urng, 2, 3);
    const FormPtr b = make_form(multiply(multiply(transpose(u), a->gram()), u));
    if (cs_invariance_check(a, b, u)) ++invariant;
  }
  out.check(invariant == 10, std::to_string(invariant) + "/10 unimodular conjugations leave CS unchanged");
  out.check(sw.seconds() < kBudget9, "time " + num(sw.seconds()) + " s < 120 s");
  return out;
}

// ---- 10 ---------------------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Worst |cos| of the angle between an arc's circle and the boundary circle,
// recomputed from the SVG path data (endpoint parameterization).
double worst_orthogonality(const std::string& svg, int& arcs) {
  static const std::regex arc(R"re(d="M ([-\d.]+) ([-\d.]+) A ([-\d.]+) [-\d.]+ 0 (\d) (\d) ([-\d.]+) ([-\d.]+)")re");
  static const std::regex boundary(R"re(class="boundary" cx="([-\d.]+)" cy="([-\d.]+)" r="([-\d.]+)")re");
  std::smatch b;
  if (!std::regex_search(svg, b, boundary)) return 1e300;
  const double bx = std::stod(b[1]), by = std::stod(b[2]), br = std::stod(b[3]);
  double worst = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), arc); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const double x1 = std::stod(m[1]), y1 = std::stod(m[2]), r = std::stod(m[3]);
    const int fa = std::stoi(m[4]), fs = std::stoi(m[5]);
    const double x2 = std::stod(m[6]), y2 = std::stod(m[7]);
    const double hx = (x1 - x2) / 2, hy = (y1 - y2) / 2;
    double k = std::sqrt(std::max(0.0, (r * r - hx * hx - hy * hy) / (hx * hx + hy * hy)));
    if (fa == fs) k = -k;
    const double cx = k * hy + (x1 + x2) / 2, cy = -k * hx + (y1 + y2) / 2;
    const double d2 = (cx - bx) * (cx - bx) + (cy - by) * (cy - by);
    worst = std::max(worst, std::abs(d2 - br * br - r * r) / (2 * br * r));
    ++arcs;
  }
  return worst;
}

Outcome criterion10() {
  Outcome out;
  unsetenv("PERIODMAP_SVG_PALETTE");
  for (const char* preset : {"fig6-i", "fig6-ii", "fig6-iii", "fig6-iv", "degenerate"}) {
    const std::string svg = render::render_config_svg(preset_config(preset), preset);
    const std::string golden = slurp(std::string(PERIODMAP_GOLDEN_DIR) + "/" + preset + ".svg");
    const std::string again = render::render_config_svg(preset_config(preset), preset);
    int arcs = 0;
    const double worst = worst_orthogonality(svg, arcs);
    out.check(!golden.empty() && svg == golden && svg == again, std::string(preset) + ".svg byte-identical to golden");
    out.check(worst < kOrthogonalityTol, std::string(preset) + ": " + std::to_string(arcs) +
                                              " arcs, worst |cos angle| with the boundary " + num(worst));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<const char*, std::function<Outcome()>>> criteria{
      {1, {"symmetric family threshold a > 2", criterion1}},
      {2, {"Betti and b+/b- identities on 200 fuzzed decompositions", criterion2}},
      {3, {"face dimension identity on 200 random configurations", criterion3}},
      {4, {"stretching limits of the two rank-2 examples", criterion4}},
      {5, {"permutahedron face counts and F o i = id on the simplex boundary", criterion5}},
      {6, {"grid coverage of the simplex at spacing 0.01", criterion6}},
      {7, {"preset face summaries vs signature oracle and golden JSON", criterion7}},
      {8, {"six condition -> type rows on generated witnesses", criterion8}},
      {9, {"conformal systole, supremum search and invariance", criterion9}},
      {10, {"golden SVGs and arc orthogonality", criterion10}},
  };
  std::vector<int> run;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      run.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (run.empty())
    for (const auto& [k, v] : criteria) run.push_back(k);

  bool all = true;
  for (int k : run) {
    const auto it = criteria.find(k);
    if (it == criteria.end()) {
      std::cerr << "no criterion " << k << '\n';
      return 2;
    }
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << std::setw(2) << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << it->second.first
              << '\n';
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
  }
  return all ? 0 : 1;
}

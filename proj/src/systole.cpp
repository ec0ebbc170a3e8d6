#include "periodmap/systole.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "periodmap/errors.hpp"
#include "periodmap/kernels.hpp"

namespace periodmap {

PeriodPoint PeriodPoint::exact(const Subspace& H) {
  const GramForm& g = H.form();
  const Signature amb = signature(g);
  const Signature s = signature(H);
  if (!s.positive_definite() || H.is_zero()) throw PreconditionError("period subspace is not positive definite");
  if (H.dim() != amb.plus) throw PreconditionError("period subspace is not maximal positive");

  // M = 2 C A^{-1} C^T - G with C = G B^T and A the restricted gram.
  const std::size_t n = g.dim();
  const RMatrix a_inv = *inverse(H.restricted_gram());
  RMatrix c;  // rows: G b_i
  for (const auto& b : H.basis()) c.push_back(g.apply(b));
  const RMatrix ct = transpose(c);  // n x k
  const RMatrix m = multiply(multiply(ct, a_inv), c);
  RMatrix exact(n, RVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) exact[i][j] = 2 * m[i][j] - g.gram()[i][j];

  PeriodPoint pp;
  pp.ambient_ = H.ambient();
  pp.H_ = H;
  pp.m_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pp.m_[i * n + j] = exact[i][j].get_d();
  pp.exact_ = std::move(exact);
  return pp;
}

PeriodPoint PeriodPoint::from_hpoint(const StandardEmbedding& emb, const HPoint& p) {
  const GramForm& g = *emb.form;
  const std::size_t n = g.dim();
  if (p.coords().size() != n) throw InputError("hyperboloid point dimension does not match the form");
  const Vec u = emb.from_standard(p.coords());
  Vec gu(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gu[i] += g.gram()[i][j].get_d() * u[j];

  PeriodPoint pp;
  pp.ambient_ = emb.form;
  pp.p_ = p;
  pp.m_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pp.m_[i * n + j] = 2 * gu[i] * gu[j] - g.gram()[i][j].get_d();
  return pp;
}

PeriodPoint PeriodPoint::from_hpoint(const FormPtr& ambient, const HPoint& p) {
  return from_hpoint(standard_embedding(ambient), p);
}

double period_norm_squared(const PeriodPoint& pp, const std::vector<long>& w) {
  const std::size_t n = pp.ambient()->dim();
  if (w.size() != n) throw InputError("lattice vector length does not match the form");
  if (pp.is_exact()) return period_norm_squared_exact(pp, w).get_d();
  double s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s += static_cast<double>(w[i]) * pp.matrix()[i * n + j] * static_cast<double>(w[j]);
  return std::max(0.0, s);
}

double period_norm(const PeriodPoint& pp, const std::vector<long>& w) { return std::sqrt(period_norm_squared(pp, w)); }

Rational period_norm_squared_exact(const PeriodPoint& pp, const std::vector<long>& w) {
  if (!pp.is_exact()) throw PreconditionError("exact norm needs an exact period point");
  const RMatrix& m = *pp.exact_matrix();
  if (w.size() != m.size()) throw InputError("lattice vector length does not match the form");
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (w[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (w[j] != 0) row += m[i][j] * w[j];
    s += row * w[i];
  }
  return s;
}

SystoleResult conf_systole(const PeriodPoint& pp, long lattice_bound, bool parallel) {
  if (lattice_bound < 1) throw InputError("lattice bound must be positive");
  const std::size_t n = pp.ambient()->dim();
  const auto& m = pp.matrix();

  double min_diag = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) min_diag = std::min(min_diag, m[i * n + i]);

  kernels::ShortVectorProblem prob;
  prob.n = n;
  prob.M = m;
  prob.box = lattice_bound;
  prob.initial_radius2 = min_diag * (1 + 1e-9);
  const auto found = parallel ? kernels::shortest_vectors_parallel(prob) : kernels::shortest_vectors_serial(prob);

  SystoleResult r;
  r.lattice_bound = lattice_bound;
  r.radius_squared = prob.initial_radius2;
  double value2;
  if (pp.is_exact()) {
    std::optional<Rational> best;
    for (const auto& w : found.vectors) {
      const Rational q = period_norm_squared_exact(pp, w);
      if (!best || q < *best) {
        best = q;
        r.minimizers.clear();
      }
      if (q == *best) r.minimizers.push_back(w);
    }
    r.value_squared = best;
    value2 = best->get_d();
  } else {
    value2 = found.minimum;
    for (const auto& w : found.vectors)
      if (std::abs(period_norm_squared(pp, w) - value2) <= 1e-12 * std::max(1.0, value2)) r.minimizers.push_back(w);
  }
  std::sort(r.minimizers.begin(), r.minimizers.end());
  r.value = std::sqrt(value2);

  // Every w with q(w) <= value^2 has |w_i| <= sqrt(value^2 (M^-1)_ii).
  Eigen::MatrixXd em(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) em(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i * n + j];
  const Eigen::MatrixXd inv = em.inverse();
  double reach = 0;
  for (Eigen::Index i = 0; i < inv.rows(); ++i) reach = std::max(reach, std::sqrt(std::max(0.0, value2 * inv(i, i))));
  r.certification_radius = static_cast<long>(std::floor(reach + 1e-9));
  r.certified = r.certification_radius <= lattice_bound;
  return r;
}

namespace {

constexpr long kMaxLatticeBound = 1L << 20;

double conf_with_embedding(const StandardEmbedding& emb, const HPoint& p, long bound, bool parallel) {
  const PeriodPoint pp = PeriodPoint::from_hpoint(emb, p);
  for (;;) {
    const SystoleResult r = conf_systole(pp, bound, parallel);
    if (r.certified) return r.value;
    bound = std::max(2 * bound, r.certification_radius);
    if (bound > kMaxLatticeBound) throw ResourceError("systole enumeration box grew beyond its limit");
  }
}

void require_hyperbolic(const GramForm& g) {
  const Signature s = signature(g);
  if (s.plus != 1 || s.null != 0 || s.minus == 0) {
    throw PreconditionError("supremum search needs signature (1,n) with n >= 1, got " + to_string(s));
  }
}

}  // namespace

double conf_at(const FormPtr& form, const HPoint& p, long lattice_bound) {
  return conf_with_embedding(standard_embedding(form), p, lattice_bound, false);
}

CsResult cs_supremum(const FormPtr& form, const CsSearch& search) {
  require_hyperbolic(*form);
  if (!(search.grid > 0) || !(search.refine > 0) || !(search.patch_radius > 0 && search.patch_radius < 1)) {
    throw InputError("search needs grid > 0, refine > 0 and a patch radius in (0, 1)");
  }
  const StandardEmbedding emb = standard_embedding(form);
  const std::size_t n = form->dim() - 1;
  const double rho = search.patch_radius;

  // Coarse grid on the disk patch.
  const long steps = static_cast<long>(std::floor(rho / search.grid));
  std::vector<Vec> grid;
  std::vector<long> idx(n, -steps);
  for (;;) {
    Vec z(n);
    double r2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = static_cast<double>(idx[i]) * search.grid;
      r2 += z[i] * z[i];
    }
    if (r2 <= rho * rho) grid.push_back(std::move(z));
    std::size_t i = 0;
    while (i < n && idx[i] == steps) idx[i++] = -steps;
    if (i == n) break;
    ++idx[i];
  }

  auto f = [&](const Vec& z) { return Vec{conf_with_embedding(emb, from_poincare_disk(z), search.lattice_bound, false)}; };
  const auto values = search.parallel ? kernels::map_points_parallel(f, grid) : kernels::map_points_serial(f, grid);
  std::size_t best_i = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i][0] > values[best_i][0]) best_i = i;

  std::size_t evaluations = grid.size();
  Vec z = grid[best_i];
  double best = values[best_i][0];
  auto objective = [&](const Vec& y) {
    double r2 = 0;
    for (double c : y) r2 += c * c;
    if (r2 >= rho * rho) return -std::numeric_limits<double>::infinity();
    ++evaluations;
    return conf_with_embedding(emb, from_poincare_disk(y), search.lattice_bound, false);
  };
  auto hyperbolic_length = [&](double dz) {
    double r2 = 0;
    for (double c : z) r2 += c * c;
    return 2 * dz / (1 - r2);
  };

  // Coordinate-wise golden-section refinement with a shrinking bracket.
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double half = search.grid;
  while (hyperbolic_length(half) >= search.refine) {
    for (std::size_t i = 0; i < n; ++i) {
      double a = z[i] - half, b = z[i] + half;
      Vec y = z;
      auto at = [&](double t) {
        y[i] = t;
        return objective(y);
      };
      double c = b - phi * (b - a), d = a + phi * (b - a);
      double fc = at(c), fd = at(d);
      while (hyperbolic_length(b - a) >= search.refine / 10) {
        if (fc >= fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - phi * (b - a);
          fc = at(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + phi * (b - a);
          fd = at(d);
        }
      }
      const double t = fc >= fd ? c : d;
      const double ft = std::max(fc, fd);
      if (ft > best) {
        best = ft;
        z[i] = t;
      }
    }
    half /= 2;
  }

  return CsResult{best, from_poincare_disk(z), z, search.grid, search.refine, evaluations};
}

bool cs_invariance_check(const FormPtr& formA, const FormPtr& formB, const RMatrix& U, const CsSearch& search) {
  if (U.size() != formA->dim() || formA->dim() != formB->dim()) throw InputError("congruence shape mismatch");
  for (const auto& row : U)
    for (const auto& c : row)
      if (c.get_den() != 1) throw PreconditionError("congruence matrix is not integral");
  if (abs(determinant(U)) != 1) throw PreconditionError("congruence matrix is not unimodular");
  if (multiply(multiply(transpose(U), formA->gram()), U) != formB->gram()) {
    throw PreconditionError("U^T Q_A U differs from Q_B");
  }
  const double a = cs_supremum(formA, search).value;
  const double b = cs_supremum(formB, search).value;
  return std::abs(a - b) < 2 * search.refine;
}

}  // namespace periodmap

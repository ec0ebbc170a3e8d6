#include "periodmap/decomposition.hpp"

#include <random>
#include <utility>

#include "periodmap/errors.hpp"

namespace periodmap {

namespace {

void add_issue(ValidationReport& r, std::string condition, RVector a, RVector b) {
  r.issues.push_back({std::move(condition), std::move(a), std::move(b)});
}

// First pair (x, y) from the two bases with Q(x, y) != 0.
bool find_nonorthogonal(const GramForm& q, const RMatrix& xs, const RMatrix& ys, bool upper_only,
                        RVector& x_out, RVector& y_out) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = upper_only ? i : 0; j < ys.size(); ++j)
      if (sgn(q.evaluate(xs[i], ys[j])) != 0) {
        x_out = xs[i];
        y_out = ys[j];
        return true;
      }
  return false;
}

void require_valid(const DecompositionData& data) {
  const ValidationReport r = validate(data);
  if (!r.ok()) throw PreconditionError("invalid decomposition data: " + r.issues.front().condition);
}

}  // namespace

ValidationReport validate(const DecompositionData& data) {
  ValidationReport r;
  const GramForm& q = *data.ambient;
  for (const Subspace* s : {&data.H1, &data.H2, &data.D}) {
    if (s->ambient_dim() != q.dim()) throw InputError("decomposition subspace has wrong ambient dimension");
  }

  for (auto [name, sub] : {std::pair{"H1", &data.H1}, std::pair{"H2", &data.H2}}) {
    const Subspace nul = nullspace(*sub);
    if (!nul.is_zero()) {
      add_issue(r, std::string("pairing on ") + name + " is degenerate", nul.basis()[0], nul.basis()[0]);
    }
  }

  RVector a, b;
  if (find_nonorthogonal(q, data.H1.basis(), data.H2.basis(), false, a, b)) {
    add_issue(r, "H1 and H2 are not orthogonal", a, b);
  }
  if (find_nonorthogonal(q, data.D.basis(), data.D.basis(), true, a, b)) {
    add_issue(r, "pairing on D is not identically zero", a, b);
  }
  const Subspace h = sum(data.H1, data.H2);
  if (find_nonorthogonal(q, data.D.basis(), h.basis(), false, a, b)) {
    add_issue(r, "D is not orthogonal to H1 + H2", a, b);
  }

  // Direct sum: look for a linear relation among the concatenated bases.
  RMatrix all = data.H1.basis();
  all.insert(all.end(), data.H2.basis().begin(), data.H2.basis().end());
  all.insert(all.end(), data.D.basis().begin(), data.D.basis().end());
  const RMatrix relations = kernel(transpose(all), all.size());
  if (!all.empty() && !relations.empty()) {
    const RVector& c = relations.front();
    const std::size_t n1 = data.H1.dim();
    const std::size_t n2 = data.H2.dim();
    RVector parts[3] = {zero_vector(q.dim()), zero_vector(q.dim()), zero_vector(q.dim())};
    for (std::size_t i = 0; i < all.size(); ++i) {
      const int which = i < n1 ? 0 : (i < n1 + n2 ? 1 : 2);
      parts[which] = axpy(parts[which], c[i], all[i]);
    }
    // parts sum to zero, so the first nonzero part equals minus the rest.
    const int first = !is_zero(parts[0]) ? 0 : 1;
    add_issue(r, "H1 + H2 + D is not a direct sum", parts[first], scale(-1, parts[first]));
  }
  return r;
}

bool check_betti_identity(const DecompositionData& data) {
  require_valid(data);
  return data.ambient->dim() == data.bhat1 + data.bhat2 + 2 * data.D.dim();
}

bool check_bpm_identity(const DecompositionData& data) {
  require_valid(data);
  const Signature whole = signature(*data.ambient);
  const Signature s1 = signature(data.H1);
  const Signature s2 = signature(data.H2);
  const std::size_t d = data.D.dim();
  return whole.plus == s1.plus + s2.plus + d && whole.minus == s1.minus + s2.minus + d;
}

HyperbolicComplement hyperbolic_complement(const DecompositionData& data) {
  require_valid(data);
  const GramForm& q = *data.ambient;
  const RMatrix& ds = data.D.basis();
  const Subspace h = sum(data.H1, data.H2);

  RMatrix rows;
  for (const auto& d : ds) rows.push_back(q.apply(d));
  for (const auto& v : h.basis()) rows.push_back(q.apply(v));

  std::vector<RVector> w;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    RVector rhs = zero_vector(rows.size());
    rhs[i] = 1;
    auto sol = solve(rows, rhs);
    if (!sol) throw InconsistentDataError("no dual vector for D basis vector " + std::to_string(i));
    w.push_back(std::move(*sol));
  }

  // Make the duals isotropic and mutually orthogonal, in index order.
  std::vector<RVector> corrected;
  for (std::size_t i = 0; i < w.size(); ++i) {
    RVector wi = axpy(w[i], -Rational(1, 2) * q.evaluate(w[i], w[i]), ds[i]);
    for (std::size_t j = 0; j < i; ++j) wi = axpy(wi, -q.evaluate(w[i], corrected[j]), ds[j]);
    corrected.push_back(std::move(wi));
  }

  HyperbolicComplement hc{Subspace(data.ambient, corrected), corrected, {}};
  RMatrix basis = ds;
  basis.insert(basis.end(), corrected.begin(), corrected.end());
  hc.pairing_matrix.assign(basis.size(), RVector(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) hc.pairing_matrix[i][j] = q.evaluate(basis[i], basis[j]);

  const std::size_t m = ds.size();
  for (std::size_t i = 0; i < 2 * m; ++i)
    for (std::size_t j = 0; j < 2 * m; ++j) {
      const Rational expected = (i + m == j || j + m == i) ? 1 : 0;
      if (hc.pairing_matrix[i][j] != expected) {
        throw InconsistentDataError("complement pairing is not a sum of hyperbolic planes");
      }
    }
  if (hc.W.dim() != m) throw InconsistentDataError("dual vectors are dependent");
  return hc;
}

Subspace limit_period_subspace(const DecompositionData& data, const Subspace& H1plus, const Subspace& H2plus) {
  require_valid(data);
  require_same_ambient(H1plus, data.H1);
  require_same_ambient(H2plus, data.H2);
  auto check = [&](const Subspace& plus, const Subspace& piece, const char* name) {
    const Subspace allowed = sum(piece, data.D);
    if (!allowed.contains(plus)) throw PreconditionError(std::string(name) + "plus is not inside " + name + " + D");
    const Signature s = signature(plus);
    if (!s.positive_definite()) throw PreconditionError(std::string(name) + "plus is not positive definite");
    if (plus.dim() != signature(piece).plus) {
      throw PreconditionError(std::string(name) + "plus is not a maximal positive subspace");
    }
  };
  check(H1plus, data.H1, "H1");
  check(H2plus, data.H2, "H2");
  return sum(sum(H1plus, data.D), H2plus);
}

Subspace limit_period_subspace(const DecompositionData& data) {
  return limit_period_subspace(data, max_positive_subspace(data.H1), max_positive_subspace(data.H2));
}

FuzzCase random_decomposition(std::uint64_t seed, std::size_t max_dim) {
  if (max_dim < 1) throw InputError("fuzzer needs max_dim >= 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  std::size_t a, b, k;
  do {
    k = static_cast<std::size_t>(uniform(0, static_cast<int>(max_dim / 2)));
    a = static_cast<std::size_t>(uniform(0, static_cast<int>(max_dim - 2 * k)));
    b = static_cast<std::size_t>(uniform(0, static_cast<int>(max_dim - 2 * k - a)));
  } while (a + b + 2 * k == 0);
  const std::size_t n = a + b + 2 * k;

  // Random unimodular matrix as a product of elementary row operations.
  auto unimodular = [&](std::size_t dim, int steps) {
    RMatrix u = identity_matrix(dim);
    if (dim < 2) return u;
    for (int s = 0; s < steps; ++s) {
      const auto i = static_cast<std::size_t>(uniform(0, static_cast<int>(dim) - 1));
      auto j = static_cast<std::size_t>(uniform(0, static_cast<int>(dim) - 2));
      if (j >= i) ++j;
      const int c = uniform(-2, 2);
      u[i] = axpy(u[i], c, u[j]);
    }
    return u;
  };

  // Block-diagonal base form: [H1 | H2 | hyperbolic planes].
  RMatrix g0(n, zero_vector(n));
  auto place_block = [&](std::size_t offset, std::size_t dim) {
    RVector diag;
    for (std::size_t i = 0; i < dim; ++i) {
      const int v = uniform(1, 3);
      diag.push_back(uniform(0, 1) ? v : -v);
    }
    const RMatrix u = unimodular(dim, 3 * static_cast<int>(dim));
    const RMatrix block = multiply(multiply(transpose(u), diagonal_matrix(diag)), u);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) g0[offset + i][offset + j] = block[i][j];
  };
  place_block(0, a);
  place_block(a, b);
  for (std::size_t p = 0; p < k; ++p) {
    const std::size_t o = a + b + 2 * p;
    g0[o][o + 1] = g0[o + 1][o] = 1;
  }

  const RMatrix u = unimodular(n, 4 * static_cast<int>(n));
  const RMatrix g = multiply(multiply(transpose(u), g0), u);
  const RMatrix u_inv = *inverse(u);
  auto pull = [&](std::size_t idx) { return multiply(u_inv, unit_vector(n, idx)); };

  RMatrix h1, h2, d;
  for (std::size_t i = 0; i < a; ++i) h1.push_back(pull(i));
  for (std::size_t i = 0; i < b; ++i) h2.push_back(pull(a + i));
  for (std::size_t p = 0; p < k; ++p) d.push_back(pull(a + b + 2 * p));

  FormPtr form = make_form(g);
  return FuzzCase{DecompositionData{form, Subspace(form, h1), Subspace(form, h2), Subspace(form, d), a, b}, u};
}

}  // namespace periodmap

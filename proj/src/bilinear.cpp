#include "periodmap/bilinear.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "periodmap/errors.hpp"

namespace periodmap {

GramForm::GramForm(RMatrix gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw InputError("gram matrix must have dimension >= 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw InputError("gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_[i][j] != gram_[j][i]) {
        throw InputError("gram matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
}

RVector GramForm::apply(const RVector& v) const {
  if (v.size() != dim()) throw InputError("vector length does not match form dimension");
  return multiply(gram_, v);
}

Rational GramForm::evaluate(const RVector& v, const RVector& w) const {
  if (v.size() != dim() || w.size() != dim()) {
    throw InputError("vector length does not match form dimension " + std::to_string(dim()));
  }
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < dim(); ++j) row += gram_[i][j] * w[j];
    s += v[i] * row;
  }
  return s;
}

FormPtr make_form(RMatrix gram) { return std::make_shared<const GramForm>(std::move(gram)); }

FormPtr make_diagonal_form(const RVector& diagonal) { return make_form(diagonal_matrix(diagonal)); }

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + "," + std::to_string(s.null) + ")";
}

Subspace::Subspace(FormPtr ambient, const RMatrix& generators) : ambient_(std::move(ambient)) {
  if (!ambient_) throw InputError("subspace without ambient form");
  const std::size_t n = ambient_->dim();
  for (const auto& g : generators) {
    if (g.size() != n) throw InputError("subspace vector length does not match ambient dimension");
  }
  for (auto i : independent_subset(generators, n)) basis_.push_back(generators[i]);
  canonical_ = rref(basis_, n).rows;
}

Subspace Subspace::zero(FormPtr ambient) { return Subspace(std::move(ambient), {}); }

Subspace Subspace::whole(FormPtr ambient) {
  const auto n = ambient->dim();
  return Subspace(std::move(ambient), identity_matrix(n));
}

bool Subspace::contains(const RVector& v) const {
  if (v.size() != ambient_dim()) throw InputError("vector length does not match ambient dimension");
  if (periodmap::is_zero(v)) return true;
  RMatrix rows = basis_;
  rows.push_back(v);
  return rank(rows, ambient_dim()) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const RVector& v) { return contains(v); });
}

RMatrix Subspace::restricted_gram() const {
  RMatrix g(dim(), RVector(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) g[i][j] = g[j][i] = ambient_->evaluate(basis_[i], basis_[j]);
  return g;
}

bool Subspace::operator==(const Subspace& other) const {
  return (ambient_ == other.ambient_ || *ambient_ == *other.ambient_) && canonical_ == other.canonical_;
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() && !(*a.ambient() == *b.ambient())) {
    throw InputError("subspaces live in different ambient forms");
  }
}

Rational evaluate(const GramForm& form, const RVector& v, const RVector& w) { return form.evaluate(v, w); }

Diagonalization diagonalize_matrix(const RMatrix& gram) {
  const std::size_t k = gram.size();
  // Work on basis vectors in coordinates; a is their Gram matrix.
  RMatrix b = identity_matrix(k);
  RMatrix a = gram;
  auto pair = [&](const RVector& x, const RVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < k; ++j) s += x[i] * gram[i][j] * y[j];
    }
    return s;
  };
  auto refresh = [&](std::size_t from) {
    for (std::size_t i = from; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) a[i][j] = a[j][i] = pair(b[i], b[j]);
  };

  for (std::size_t i = 0; i < k; ++i) {
    std::size_t p = i;
    while (p < k && sgn(a[p][p]) == 0) ++p;
    if (p == k) {
      // All remaining diagonal entries vanish; use b_j + b_l with a[j][l] != 0.
      bool found = false;
      for (std::size_t j = i; j < k && !found; ++j)
        for (std::size_t l = j + 1; l < k && !found; ++l)
          if (sgn(a[j][l]) != 0) {
            b[j] = add(b[j], b[l]);
            refresh(i);
            p = j;
            found = true;
          }
      if (!found) break;  // the rest is totally isotropic and orthogonal to everything
    }
    if (p != i) {
      std::swap(b[p], b[i]);
      refresh(i);
    }
    for (std::size_t l = i + 1; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      b[l] = axpy(b[l], -a[i][l] / a[i][i], b[i]);
    }
    refresh(i);
  }

  Diagonalization d;
  for (auto& v : b) {
    RVector prim = primitive_integer(v);
    d.values.push_back(pair(prim, prim));
    d.vectors.push_back(std::move(prim));
  }
  return d;
}

Diagonalization diagonalize(const GramForm& form) { return diagonalize_matrix(form.gram()); }

Diagonalization diagonalize(const Subspace& sub) {
  const Diagonalization local = diagonalize_matrix(sub.restricted_gram());
  Diagonalization d;
  for (const auto& c : local.vectors) {
    RVector v = zero_vector(sub.ambient_dim());
    for (std::size_t i = 0; i < c.size(); ++i) v = axpy(v, c[i], sub.basis()[i]);
    v = primitive_integer(v);
    d.values.push_back(sub.form().evaluate(v, v));
    d.vectors.push_back(std::move(v));
  }
  return d;
}

Signature signature_of_matrix(const RMatrix& gram) {
  Signature s;
  for (const auto& v : diagonalize_matrix(gram).values) {
    const int sg = sgn(v);
    if (sg > 0) ++s.plus;
    else if (sg < 0) ++s.minus;
    else ++s.null;
  }
  return s;
}

Signature signature(const GramForm& form) { return signature_of_matrix(form.gram()); }

Signature signature(const Subspace& sub) { return signature_of_matrix(sub.restricted_gram()); }

Subspace orth_complement(const Subspace& sub) {
  RMatrix rows;
  for (const auto& b : sub.basis()) rows.push_back(sub.form().apply(b));
  if (rows.empty()) return Subspace::whole(sub.ambient());
  return Subspace(sub.ambient(), kernel(rows, sub.ambient_dim()));
}

Subspace nullspace(const Subspace& sub) { return intersect(sub, orth_complement(sub)); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  RMatrix gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient(), gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient());
  // x = sum alpha_i a_i lies in b iff every annihilator row of b kills it.
  const RMatrix ann = kernel(b.basis(), n);
  if (ann.empty()) return a;
  RMatrix system(ann.size(), RVector(a.dim()));
  for (std::size_t r = 0; r < ann.size(); ++r)
    for (std::size_t i = 0; i < a.dim(); ++i) system[r][i] = euclidean_dot(ann[r], a.basis()[i]);
  RMatrix gens;
  for (const auto& alpha : kernel(system, a.dim())) {
    RVector x = zero_vector(n);
    for (std::size_t i = 0; i < alpha.size(); ++i) x = axpy(x, alpha[i], a.basis()[i]);
    gens.push_back(std::move(x));
  }
  return Subspace(a.ambient(), gens);
}

Subspace max_positive_subspace(const Subspace& sub) {
  const Diagonalization d = diagonalize(sub);
  RMatrix gens;
  for (std::size_t i = 0; i < d.vectors.size(); ++i)
    if (sgn(d.values[i]) > 0) gens.push_back(d.vectors[i]);
  return Subspace(sub.ambient(), gens);
}

std::vector<double> StandardEmbedding::to_standard(const RVector& x) const {
  const RVector c = multiply(inverse, x);
  std::vector<double> y(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) y[j] = c[j].get_d() * std::sqrt(scales[j].get_d());
  return y;
}

std::vector<double> StandardEmbedding::to_standard(const std::vector<double>& x) const {
  std::vector<double> y(inverse.size(), 0.0);
  for (std::size_t j = 0; j < inverse.size(); ++j) {
    double c = 0;
    for (std::size_t i = 0; i < x.size(); ++i) c += inverse[j][i].get_d() * x[i];
    y[j] = c * std::sqrt(scales[j].get_d());
  }
  return y;
}

std::vector<double> StandardEmbedding::from_standard(const std::vector<double>& y) const {
  const std::size_t n = axes.size();
  std::vector<double> x(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double c = y[j] / std::sqrt(scales[j].get_d());
    for (std::size_t i = 0; i < n; ++i) x[i] += c * axes[j][i].get_d();
  }
  return x;
}

StandardEmbedding standard_embedding(const FormPtr& form) {
  const Signature sig = signature(*form);
  if (sig.plus != 1 || sig.null != 0) {
    throw PreconditionError("standard embedding needs signature (1,n,0), got " + to_string(sig));
  }
  const Diagonalization d = diagonalize(*form);
  StandardEmbedding e;
  e.form = form;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < d.vectors.size(); ++i)
      if ((sgn(d.values[i]) > 0) == (pass == 0)) {
        e.axes.push_back(d.vectors[i]);
        e.scales.push_back(abs(d.values[i]));
      }
  auto inv = periodmap::inverse(transpose(e.axes));
  if (!inv) throw InconsistentDataError("diagonalizing basis is singular");
  e.inverse = std::move(*inv);
  return e;
}

}  // namespace periodmap

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "periodmap/rational.hpp"

namespace periodmap {

/// Exact symmetric bilinear form. Degenerate forms are allowed.
class GramForm {
 public:
  explicit GramForm(RMatrix gram);

  std::size_t dim() const noexcept { return gram_.size(); }
  const RMatrix& gram() const noexcept { return gram_; }

  Rational evaluate(const RVector& v, const RVector& w) const;
  /// gram * v
  RVector apply(const RVector& v) const;

  bool operator==(const GramForm& other) const { return gram_ == other.gram_; }

 private:
  RMatrix gram_;
};

using FormPtr = std::shared_ptr<const GramForm>;

FormPtr make_form(RMatrix gram);
FormPtr make_diagonal_form(const RVector& diagonal);

struct Signature {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t null = 0;

  std::size_t dim() const noexcept { return plus + minus + null; }
  bool positive_definite() const noexcept { return minus == 0 && null == 0; }
  bool negative_definite() const noexcept { return plus == 0 && null == 0; }
  bool nondegenerate() const noexcept { return null == 0; }
  bool operator==(const Signature&) const = default;
};

std::string to_string(const Signature& s);

/// Span of rational vectors in a form's ambient space. The stored basis is
/// the greedy independent subset of the generators, in input order.
class Subspace {
 public:
  Subspace(FormPtr ambient, const RMatrix& generators);

  static Subspace zero(FormPtr ambient);
  static Subspace whole(FormPtr ambient);

  const FormPtr& ambient() const noexcept { return ambient_; }
  const GramForm& form() const noexcept { return *ambient_; }
  const RMatrix& basis() const noexcept { return basis_; }
  /// RREF of the basis; equal subspaces have identical canonical forms.
  const RMatrix& canonical() const noexcept { return canonical_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_->dim(); }
  bool is_zero() const noexcept { return basis_.empty(); }

  bool contains(const RVector& v) const;
  bool contains(const Subspace& other) const;

  /// Restricted pairing B * G * B^T on the stored basis.
  RMatrix restricted_gram() const;

  bool operator==(const Subspace& other) const;

 private:
  FormPtr ambient_;
  RMatrix basis_;
  RMatrix canonical_;
};

Rational evaluate(const GramForm& form, const RVector& v, const RVector& w);

Signature signature(const GramForm& form);
Signature signature(const Subspace& sub);
/// Signature of an arbitrary symmetric matrix.
Signature signature_of_matrix(const RMatrix& gram);

Subspace orth_complement(const Subspace& sub);
Subspace nullspace(const Subspace& sub);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Congruence diagonalization: vectors[i] are pairwise orthogonal, values[i]
/// is the self-pairing of vectors[i]. Vectors are primitive integer multiples
/// (first nonzero entry positive) in the coordinates they were given in.
struct Diagonalization {
  RMatrix vectors;
  RVector values;
};

Diagonalization diagonalize_matrix(const RMatrix& gram);
Diagonalization diagonalize(const GramForm& form);
/// Diagonalizes the restricted pairing; vectors are in ambient coordinates.
Diagonalization diagonalize(const Subspace& sub);

/// Span of the positive vectors of diagonalize(sub): a maximal positive
/// subspace of sub.
Subspace max_positive_subspace(const Subspace& sub);

/// Rational congruence to the standard form. The real isometry sends the
/// standard basis vector e_j to axes[j] / sqrt(scales[j]); axes[0] is the
/// positive axis.
struct StandardEmbedding {
  FormPtr form;
  RMatrix axes;    // ambient coordinates, one per standard axis
  RVector scales;  // |Q(axes[j], axes[j])| > 0
  RMatrix inverse; // rows: coefficient functionals c_j(x)

  /// Ambient coordinates -> standard coordinates, x0 is the time axis.
  std::vector<double> to_standard(const RVector& x) const;
  std::vector<double> to_standard(const std::vector<double>& x) const;
  /// Standard coordinates -> ambient coordinates.
  std::vector<double> from_standard(const std::vector<double>& y) const;
};

/// Requires signature (1, n, 0); throws PreconditionError otherwise.
StandardEmbedding standard_embedding(const FormPtr& form);

void require_same_ambient(const Subspace& a, const Subspace& b);

}  // namespace periodmap

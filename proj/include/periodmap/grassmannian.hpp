#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "periodmap/bilinear.hpp"

namespace periodmap {

using Vec = std::vector<double>;

/// x0*y0 - x1*y1 - ... in standard coordinates.
double minkowski_dot(const Vec& x, const Vec& y);

/// Point of the hyperboloid x.x = 1, x0 > 0, in standard coordinates.
class HPoint {
 public:
  static constexpr double kTolerance = 1e-9;

  /// Throws NumericalDomainError if coords is off the upper sheet.
  explicit HPoint(Vec coords);

  const Vec& coords() const noexcept { return x_; }
  std::size_t n() const noexcept { return x_.size() - 1; }
  double operator[](std::size_t i) const { return x_[i]; }

 private:
  Vec x_;
};

/// Normalizes a positive vector (standard coordinates) onto the upper sheet.
HPoint line_to_hpoint(const Vec& v);
/// Same for an ambient rational vector, via the standard embedding.
HPoint line_to_hpoint(const StandardEmbedding& emb, const RVector& v);

/// Point at distance t from the base point (1|0,...) along axis `axis`.
HPoint hpoint_along_axis(std::size_t n, std::size_t axis, double t);

Vec to_poincare_disk(const HPoint& p);
Vec to_klein(const HPoint& p);
HPoint from_poincare_disk(const Vec& z);

/// Boundary point of a null direction (x.x = 0, x != 0), either sign.
Vec ideal_to_disk(const Vec& null_vector);

/// arccosh(p.q). Throws NumericalDomainError when p.q < 1 - 1e-9.
double hyperbolic_distance(const HPoint& p, const HPoint& q);

/// Ideal endpoints (disk boundary) of the wall w^perp in R^{1,2}, w.w < 0.
std::array<Vec, 2> geodesic_endpoints(const Vec& wall);
std::array<Vec, 2> geodesic_endpoints(const StandardEmbedding& emb, const RVector& wall);

enum class ConstraintKind { Geodesic, IdealPoint, Point, ProductGrassmannian };

std::string to_string(ConstraintKind k);

/// Kind plus the exact locus. For Geodesic the generators are the walls
/// (w.w < 0) and the locus is their common orthogonal complement; for
/// IdealPoint the generator is the null vector; for Point the generator is a
/// canonical positive vector and the locus is the span itself. locus_dim is
/// the dimension of the locus's positive lines as a subset of H^n (0 for a
/// point or ideal point).
struct ConstraintSet {
  ConstraintKind kind;
  RMatrix generators;
  Subspace locus;
  std::size_t locus_dim = 0;
};

/// Exact classification of a span in an ambient of signature (1, n).
ConstraintSet classify_span(const Subspace& v_sub);

struct RationalApproximation {
  RMatrix vectors;  // pairwise orthogonal, positive
  mpz_class N;      // N * vectors[i] integral
  double distance = 0;  // largest Euclidean principal angle to the target
};

/// Exact target: Gram-Schmidt of its basis (unchanged when already
/// orthogonal).
RationalApproximation rational_orthogonal_approximation(const Subspace& target, double eps);

/// Float target given by a basis in ambient coordinates. Coordinates are
/// rounded by continued fractions with denominators <= denominator_bound.
RationalApproximation rational_orthogonal_approximation(const FormPtr& form, const std::vector<Vec>& target,
                                                        double eps, long denominator_bound = 1000000);

/// Closest rational p/q to x with q <= bound.
Rational best_rational(double x, long bound);

/// Largest principal angle between two spans in the Euclidean metric.
double principal_angle_distance(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace periodmap

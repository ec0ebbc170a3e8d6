#include "periodmap/grassmannian.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <utility>

#include "periodmap/errors.hpp"

namespace periodmap {

double minkowski_dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size() || x.empty()) throw InputError("minkowski_dot: length mismatch");
  double s = x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * y[i];
  return s;
}

HPoint::HPoint(Vec coords) : x_(std::move(coords)) {
  if (x_.size() < 2) throw InputError("hyperboloid point needs at least 2 coordinates");
  const double q = minkowski_dot(x_, x_);
  if (!(std::abs(q - 1.0) < kTolerance) || !(x_[0] > 0)) {
    throw NumericalDomainError("not on the upper hyperboloid sheet (x.x = " + std::to_string(q) + ")");
  }
}

HPoint line_to_hpoint(const Vec& v) {
  const double q = minkowski_dot(v, v);
  if (!(q > 0)) throw DomainError("line is not positive (v.v = " + std::to_string(q) + ")");
  const double s = (v[0] > 0 ? 1.0 : -1.0) / std::sqrt(q);
  Vec x(v.size());
  std::transform(v.begin(), v.end(), x.begin(), [s](double c) { return c * s; });
  return HPoint(std::move(x));
}

HPoint line_to_hpoint(const StandardEmbedding& emb, const RVector& v) {
  if (sgn(emb.form->evaluate(v, v)) <= 0) throw DomainError("line is not positive: " + to_string(v));
  return line_to_hpoint(emb.to_standard(v));
}

HPoint hpoint_along_axis(std::size_t n, std::size_t axis, double t) {
  if (axis < 1 || axis > n) throw InputError("axis out of range");
  Vec x(n + 1, 0.0);
  x[0] = std::cosh(t);
  x[axis] = std::sinh(t);
  return HPoint(std::move(x));
}

Vec to_poincare_disk(const HPoint& p) {
  const Vec& x = p.coords();
  Vec z(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) z[i - 1] = x[i] / (1.0 + x[0]);
  return z;
}

Vec to_klein(const HPoint& p) {
  const Vec& x = p.coords();
  Vec z(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) z[i - 1] = x[i] / x[0];
  return z;
}

HPoint from_poincare_disk(const Vec& z) {
  double r2 = 0;
  for (double c : z) r2 += c * c;
  if (!(r2 < 1)) throw DomainError("point is not inside the unit disk");
  Vec x(z.size() + 1);
  x[0] = (1 + r2) / (1 - r2);
  for (std::size_t i = 0; i < z.size(); ++i) x[i + 1] = 2 * z[i] / (1 - r2);
  return HPoint(std::move(x));
}

Vec ideal_to_disk(const Vec& null_vector) {
  if (null_vector.empty() || null_vector[0] == 0) throw DomainError("not a null direction");
  Vec z(null_vector.size() - 1);
  for (std::size_t i = 1; i < null_vector.size(); ++i) z[i - 1] = null_vector[i] / null_vector[0];
  return z;
}

double hyperbolic_distance(const HPoint& p, const HPoint& q) {
  const double c = minkowski_dot(p.coords(), q.coords());
  if (c < 1.0 - HPoint::kTolerance) {
    throw NumericalDomainError("p.q = " + std::to_string(c) + " < 1 for hyperboloid points");
  }
  return std::acosh(std::max(1.0, c));
}

std::array<Vec, 2> geodesic_endpoints(const Vec& wall) {
  if (wall.size() != 3) throw InputError("geodesic endpoints are only defined in R^{1,2}");
  if (!(minkowski_dot(wall, wall) < 0)) throw DomainError("wall vector is not negative");
  // Null x = (1|cos a, sin a) in the wall: w1 cos a + w2 sin a = w0.
  const double r = std::hypot(wall[1], wall[2]);
  const double phi = std::atan2(wall[2], wall[1]);
  const double delta = std::acos(std::clamp(wall[0] / r, -1.0, 1.0));
  return {Vec{std::cos(phi + delta), std::sin(phi + delta)}, Vec{std::cos(phi - delta), std::sin(phi - delta)}};
}

std::array<Vec, 2> geodesic_endpoints(const StandardEmbedding& emb, const RVector& wall) {
  return geodesic_endpoints(emb.to_standard(wall));
}

std::string to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::Geodesic: return "geodesic";
    case ConstraintKind::IdealPoint: return "ideal_point";
    case ConstraintKind::Point: return "point";
    case ConstraintKind::ProductGrassmannian: return "product_grassmannian";
  }
  return "unknown";
}

ConstraintSet classify_span(const Subspace& v_sub) {
  const Signature amb = signature(v_sub.form());
  if (amb.plus != 1 || amb.null != 0) {
    throw DomainError("classification needs ambient signature (1,n), got " + to_string(amb));
  }
  if (v_sub.is_zero()) throw InputError("cannot classify the zero subspace");
  const Signature s = signature(v_sub);
  if (s.negative_definite()) {
    Subspace locus = orth_complement(v_sub);
    const std::size_t ld = locus.dim() - 1;
    return {ConstraintKind::Geodesic, v_sub.basis(), std::move(locus), ld};
  }
  if (s.plus == 0) {
    // Semi-negative: in a (1,n) ambient the null space is a single line.
    Subspace nul = nullspace(v_sub);
    RMatrix gen{primitive_integer(nul.basis().front())};
    return {ConstraintKind::IdealPoint, gen, std::move(nul), 0};
  }
  const Diagonalization d = diagonalize(v_sub);
  RMatrix witness;
  for (std::size_t i = 0; i < d.values.size(); ++i)
    if (sgn(d.values[i]) > 0) {
      witness.push_back(d.vectors[i]);
      break;
    }
  return {ConstraintKind::Point, witness, v_sub, s.minus};
}

Rational best_rational(double x, long bound) {
  if (!std::isfinite(x)) throw InputError("cannot approximate a non-finite value");
  if (bound < 1) throw InputError("denominator bound must be positive");
  const Rational exact(x);
  const mpz_class limit(bound);
  if (exact.get_den() <= limit) return exact;

  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = exact.get_num(), d = exact.get_den();
  for (;;) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > limit) break;
    const mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  const mpz_class k = (limit - q0) / q1;
  Rational semi(p0 + k * p1, q0 + k * q1);
  Rational conv(p1, q1);
  semi.canonicalize();
  conv.canonicalize();
  return abs(conv - exact) <= abs(semi - exact) ? conv : semi;
}

namespace {

Eigen::MatrixXd orthonormal_columns(const std::vector<Vec>& vs) {
  const auto rows = static_cast<Eigen::Index>(vs.front().size());
  const auto cols = static_cast<Eigen::Index>(vs.size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = vs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  return qr.householderQ() * Eigen::MatrixXd::Identity(rows, cols);
}

std::vector<Vec> to_double_rows(const RMatrix& m) {
  std::vector<Vec> out;
  for (const auto& r : m) out.push_back(to_double(r));
  return out;
}

RMatrix gram_schmidt(const GramForm& q, const RMatrix& vs) {
  RMatrix out;
  for (const auto& v : vs) {
    RVector s = v;
    for (const auto& o : out) s = axpy(s, -q.evaluate(v, o) / q.evaluate(o, o), o);
    if (sgn(q.evaluate(s, s)) <= 0) return {};
    out.push_back(std::move(s));
  }
  return out;
}

mpz_class lcm_of_denominators(const RMatrix& vs) {
  mpz_class l = 1;
  for (const auto& v : vs) {
    const mpz_class d = common_denominator(v);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace

double principal_angle_distance(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.size() != b.size()) return M_PI / 2;
  if (a.empty()) return 0;
  const Eigen::MatrixXd qa = orthonormal_columns(a);
  const Eigen::MatrixXd qb = orthonormal_columns(b);
  // Sine of the largest principal angle is ||(I - Pa) Qb||_2.
  const Eigen::MatrixXd residual = qb - qa * (qa.transpose() * qb);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  const double s = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  return std::asin(std::min(1.0, s));
}

RationalApproximation rational_orthogonal_approximation(const Subspace& target, double eps) {
  if (!(eps > 0)) throw InputError("eps must be positive");
  if (target.is_zero() || !signature(target).positive_definite()) {
    throw PreconditionError("approximation target must be positive definite");
  }
  RationalApproximation r;
  r.vectors = gram_schmidt(target.form(), target.basis());
  r.N = lcm_of_denominators(r.vectors);
  r.distance = 0;
  return r;
}

RationalApproximation rational_orthogonal_approximation(const FormPtr& form, const std::vector<Vec>& target,
                                                        double eps, long denominator_bound) {
  if (!(eps > 0)) throw InputError("eps must be positive");
  if (target.empty()) throw InputError("empty approximation target");
  const std::size_t n = form->dim();
  for (const auto& v : target)
    if (v.size() != n) throw InputError("target vector length does not match the form");

  // Float positivity of the target: Cholesky of its Gram matrix.
  const auto k = static_cast<Eigen::Index>(target.size());
  Eigen::MatrixXd g(n, n), t(static_cast<Eigen::Index>(n), k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = form->gram()[i][j].get_d();
  for (Eigen::Index j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) t(i, j) = target[static_cast<std::size_t>(j)][i];
  const Eigen::MatrixXd tg = t.transpose() * g * t;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tg);
  if (es.eigenvalues().minCoeff() <= 1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff())) {
    throw PreconditionError("approximation target is not positive definite");
  }

  RMatrix rounded;
  for (const auto& v : target) {
    RVector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = best_rational(v[i], denominator_bound);
    rounded.push_back(std::move(r));
  }
  RationalApproximation out;
  if (rank(rounded, n) == target.size()) out.vectors = gram_schmidt(*form, rounded);
  if (out.vectors.empty()) {
    throw ResolutionError("rounded basis is not positive definite at this denominator bound", M_PI / 2);
  }
  out.distance = principal_angle_distance(target, to_double_rows(out.vectors));
  if (!(out.distance < eps)) {
    throw ResolutionError("achieved distance " + std::to_string(out.distance) + " is not below eps", out.distance);
  }
  out.N = lcm_of_denominators(out.vectors);
  return out;
}

}  // namespace periodmap

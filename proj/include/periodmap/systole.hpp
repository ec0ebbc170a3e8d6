#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "periodmap/bilinear.hpp"
#include "periodmap/grassmannian.hpp"

namespace periodmap {

/// A maximal positive subspace H of the ambient form: exact (rational basis)
/// or, when b+ = 1, a hyperboloid point in standard coordinates.
class PeriodPoint {
 public:
  /// H must be positive definite of dimension b+(ambient).
  static PeriodPoint exact(const Subspace& H);
  /// Requires ambient signature (1, n).
  static PeriodPoint from_hpoint(const FormPtr& ambient, const HPoint& p);
  static PeriodPoint from_hpoint(const StandardEmbedding& emb, const HPoint& p);

  const FormPtr& ambient() const noexcept { return ambient_; }
  bool is_exact() const noexcept { return exact_.has_value(); }
  const std::optional<Subspace>& subspace() const noexcept { return H_; }
  const std::optional<HPoint>& point() const noexcept { return p_; }

  /// q(w) = 2 Q(w+, w+) - Q(w, w) as a matrix; exact only on the exact path.
  const std::optional<RMatrix>& exact_matrix() const noexcept { return exact_; }
  const std::vector<double>& matrix() const noexcept { return m_; }

 private:
  PeriodPoint() = default;

  FormPtr ambient_;
  std::optional<Subspace> H_;
  std::optional<HPoint> p_;
  std::optional<RMatrix> exact_;
  std::vector<double> m_;  // row-major
};

/// |w|^2 = Q(w+, w+) - Q(w-, w-) along H + H^perp.
double period_norm_squared(const PeriodPoint& pp, const std::vector<long>& w);
double period_norm(const PeriodPoint& pp, const std::vector<long>& w);
/// Exact path only.
Rational period_norm_squared_exact(const PeriodPoint& pp, const std::vector<long>& w);

struct SystoleResult {
  double value = 0;                          // conf = min |w|
  std::optional<Rational> value_squared;     // exact on the exact path
  std::vector<std::vector<long>> minimizers;  // sorted
  long lattice_bound = 0;                    // box used for the enumeration
  double radius_squared = 0;                 // initial enumeration radius
  long certification_radius = 0;             // box that provably contains all minimizers
  bool certified = false;
};

SystoleResult conf_systole(const PeriodPoint& pp, long lattice_bound, bool parallel = true);

struct CsSearch {
  double grid = 0.05;          // disk-coordinate spacing of the coarse grid
  double refine = 1e-6;        // target hyperbolic length of the final bracket
  double patch_radius = 0.995; // disk patch searched
  long lattice_bound = 64;     // doubled when a sample is uncertified
  bool parallel = true;
};

struct CsResult {
  double value = 0;
  HPoint point;
  Vec disk;
  double grid = 0;
  double refine = 0;
  std::size_t evaluations = 0;
};

/// conf at a hyperboloid point with automatic box enlargement.
double conf_at(const FormPtr& form, const HPoint& p, long lattice_bound = 64);

CsResult cs_supremum(const FormPtr& form, const CsSearch& search = {});

/// U^T Q_A U must equal Q_B exactly. Compares the two suprema.
bool cs_invariance_check(const FormPtr& formA, const FormPtr& formB, const RMatrix& U,
                         const CsSearch& search = {});

}  // namespace periodmap

#pragma once

// Data-parallel hot loops. Every kernel has a serial reference and an OpenMP
// variant; both return identical results for identical input.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace periodmap {

class NestedSequence;
struct SurfaceConfig;
struct FaceConstraint;

using Vec = std::vector<double>;

namespace kernels {

// ---- short vectors --------------------------------------------------------

/// Positive definite quadratic form q(w) = w^T M w, M row-major n x n.
struct ShortVectorProblem {
  std::size_t n = 0;
  std::vector<double> M;
  long box = 0;                 // |w_i| <= box
  double initial_radius2 = 0;   // enumerate q(w) <= this, shrinking as better vectors appear
  double tie_tolerance = 1e-9;  // relative slack kept around the running minimum
};

struct ShortVectorResult {
  double minimum = 0;                    // smallest q found (inf if none)
  std::vector<std::vector<long>> vectors;  // q(w) <= minimum * (1 + tie_tolerance), sorted
  std::size_t nodes = 0;                 // enumeration tree nodes visited
};

ShortVectorResult shortest_vectors_serial(const ShortVectorProblem& p);
ShortVectorResult shortest_vectors_parallel(const ShortVectorProblem& p);

/// All nonzero w in the box with q(w) <= radius2, sorted (brute force).
std::vector<std::vector<long>> box_enumerate(const ShortVectorProblem& p, double radius2);

// ---- coverage -------------------------------------------------------------

using PointMap = std::function<Vec(const Vec&)>;

std::vector<Vec> map_points_serial(const PointMap& f, const std::vector<Vec>& points);
std::vector<Vec> map_points_parallel(const PointMap& f, const std::vector<Vec>& points);

struct CoverageResult {
  std::optional<std::size_t> first_uncovered;  // smallest uncovered grid index
  double worst_gap = 0;                         // max over grid of distance to nearest image
};

/// Is every grid point within `radius` of some image? Points are compared in
/// the Euclidean metric of their full coordinate vectors.
CoverageResult coverage_serial(const std::vector<Vec>& grid, const std::vector<Vec>& images, double radius);
CoverageResult coverage_parallel(const std::vector<Vec>& grid, const std::vector<Vec>& images, double radius);

// ---- face sweep -----------------------------------------------------------

std::vector<FaceConstraint> face_sweep_serial(const SurfaceConfig& cfg, const std::vector<NestedSequence>& faces);
std::vector<FaceConstraint> face_sweep_parallel(const SurfaceConfig& cfg, const std::vector<NestedSequence>& faces);

}  // namespace kernels
}  // namespace periodmap

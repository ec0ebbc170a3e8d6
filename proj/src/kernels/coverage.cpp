#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <unordered_map>

#include "periodmap/errors.hpp"
#include "periodmap/kernels.hpp"

namespace periodmap::kernels {

std::vector<Vec> map_points_serial(const PointMap& f, const std::vector<Vec>& points) {
  std::vector<Vec> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(f(p));
  return out;
}

std::vector<Vec> map_points_parallel(const PointMap& f, const std::vector<Vec>& points) {
  std::vector<Vec> out(points.size());
  const auto count = static_cast<long>(points.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(points[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

namespace {

// Uniform bucket grid over the first d coordinates of the images.
class Buckets {
 public:
  Buckets(const std::vector<Vec>& images, double cell) : images_(images), cell_(cell) {
    if (images.empty()) return;
    dims_ = std::min<std::size_t>(images.front().size(), 3);
    for (std::size_t i = 0; i < images.size(); ++i) table_[key_of(cells(images[i]))].push_back(i);
  }

  double nearest(const Vec& x, double cutoff) const {
    double best = std::numeric_limits<double>::infinity();
    if (images_.empty()) return best;
    const auto c = cells(x);
    const long reach = static_cast<long>(std::ceil(cutoff / cell_));
    std::vector<long> offset(dims_, -reach);
    for (;;) {
      std::vector<long> k(c);
      for (std::size_t i = 0; i < dims_; ++i) k[i] += offset[i];
      const auto it = table_.find(key_of(k));
      if (it != table_.end()) {
        for (std::size_t idx : it->second) best = std::min(best, distance(x, images_[idx]));
      }
      std::size_t i = 0;
      while (i < dims_ && offset[i] == reach) offset[i++] = -reach;
      if (i == dims_) break;
      ++offset[i];
    }
    return best;
  }

 private:
  std::vector<long> cells(const Vec& x) const {
    std::vector<long> c(dims_);
    for (std::size_t i = 0; i < dims_; ++i) c[i] = static_cast<long>(std::floor(x[i] / cell_));
    return c;
  }

  static std::uint64_t key_of(const std::vector<long>& c) {
    std::uint64_t h = 1469598103934665603ull;
    for (long v : c) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  static double distance(const Vec& a, const Vec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
  }

  const std::vector<Vec>& images_;
  double cell_;
  std::size_t dims_ = 0;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> table_;
};

void require_radius(double radius) {
  if (!(radius > 0)) throw InputError("coverage radius must be positive");
}

}  // namespace

CoverageResult coverage_serial(const std::vector<Vec>& grid, const std::vector<Vec>& images, double radius) {
  require_radius(radius);
  const Buckets buckets(images, radius);
  CoverageResult r;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = buckets.nearest(grid[i], radius);
    r.worst_gap = std::max(r.worst_gap, d);
    if (!(d <= radius) && !r.first_uncovered) r.first_uncovered = i;
  }
  return r;
}

CoverageResult coverage_parallel(const std::vector<Vec>& grid, const std::vector<Vec>& images, double radius) {
  require_radius(radius);
  const Buckets buckets(images, radius);
  const auto count = static_cast<long>(grid.size());
  double worst = 0;
  long first = count;
#pragma omp parallel for schedule(static) reduction(max : worst) reduction(min : first)
  for (long i = 0; i < count; ++i) {
    const double d = buckets.nearest(grid[static_cast<std::size_t>(i)], radius);
    worst = std::max(worst, d);
    if (!(d <= radius)) first = std::min(first, i);
  }
  CoverageResult r;
  r.worst_gap = worst;
  if (first < count) r.first_uncovered = static_cast<std::size_t>(first);
  return r;
}

}  // namespace periodmap::kernels

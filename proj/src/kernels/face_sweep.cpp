#include <exception>
#include <optional>

#include "periodmap/face_constraints.hpp"
#include "periodmap/kernels.hpp"

namespace periodmap::kernels {

std::vector<FaceConstraint> face_sweep_serial(const SurfaceConfig& cfg, const std::vector<NestedSequence>& faces) {
  std::vector<FaceConstraint> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(constraint_for_face(cfg, f));
  return out;
}

std::vector<FaceConstraint> face_sweep_parallel(const SurfaceConfig& cfg, const std::vector<NestedSequence>& faces) {
  std::vector<std::optional<FaceConstraint>> slots(faces.size());
  const auto count = static_cast<long>(faces.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(constraint_for_face(cfg, faces[static_cast<std::size_t>(i)]));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::vector<FaceConstraint> out;
  out.reserve(faces.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace periodmap::kernels

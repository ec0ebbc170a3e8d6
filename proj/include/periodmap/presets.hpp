#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "periodmap/decomposition.hpp"
#include "periodmap/face_constraints.hpp"

namespace periodmap {

/// The rotationally symmetric family in the basis (e0, e1, (sqrt3/2) e2),
/// where the form is diag(1, -1, -3/4) and
/// v1 = (1|a,0), v2 = (1|-a/2,a), v3 = (1|-a/2,-a).
SurfaceConfig symmetric_family(const Rational& a);

/// fig6-i, fig6-ii, fig6-iii, fig6-iv, degenerate, symmetric (needs a).
SurfaceConfig preset_config(std::string_view name, const std::optional<Rational>& a = std::nullopt);

std::vector<std::string> preset_names();

/// Two-dimensional splittings with a known limit:
///   cp2-cp2bar   Q = diag(-1, 1) on (E, H), split along the neck sphere, D = 0
///   s2xs2-s1xs2  hyperbolic plane, D = the y-axis
///   s2xs2-s2xs1  hyperbolic plane, D = the x-axis
DecompositionData decomposition_preset(std::string_view name);

std::vector<std::string> decomposition_preset_names();

}  // namespace periodmap

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "periodmap/bilinear.hpp"
#include "periodmap/grassmannian.hpp"
#include "periodmap/permutahedron.hpp"

namespace periodmap {

/// Vectors v_1, ..., v_{n+1} in a form's ambient space. Linear independence
/// is not enforced (see independent()).
struct SurfaceConfig {
  FormPtr form;
  RMatrix vectors;

  int n() const noexcept { return static_cast<int>(vectors.size()) - 1; }
  bool independent() const;
  /// V_I, the span of v_i for i in I (1-based).
  Subspace span(Subset I) const;
};

/// Validates vector lengths and requires at least two vectors.
SurfaceConfig make_config(FormPtr form, RMatrix vectors);

struct FacePiece {
  Subspace P;      // V_{I_i} cap V_{I_{i-1}}^perp
  Signature sig;
  Subspace Hplus;  // default maximal positive subspace of P
};

struct FaceConstraint {
  NestedSequence sequence;
  std::vector<Subspace> V;        // V_{I_0}, ..., V_{I_{l+1}}
  std::vector<FacePiece> pieces;  // i = 1, ..., l+1
  std::vector<Subspace> nulls;    // N_0 = 0, N_1, ..., N_l, N_{l+1} = null(ambient)
  Subspace witness;               // H_{l+1}^+ + sum_{i<=l} (H_i^+ + N_i)
  Signature witness_signature;
  ConstraintSet summary;          // b+ = 1: bplus1_summary; else product description
};

FaceConstraint constraint_for_face(const SurfaceConfig& cfg, const NestedSequence& ns);

struct DimensionIdentity {
  long lhs = 0;  // b+(ambient)
  long rhs = 0;  // sum b+(P_i) + sum (|N_{i-1}| - |N_{i-1} cap N_i|)
  bool nesting_ok = true;
  bool holds() const noexcept { return lhs == rhs && nesting_ok; }
};

DimensionIdentity dimension_identity(const SurfaceConfig& cfg, const NestedSequence& ns);
bool check_dimension_identity(const SurfaceConfig& cfg, const NestedSequence& ns);

/// First 1-based index j with V_{I_j} not negative definite.
std::optional<std::size_t> iplus(const SurfaceConfig& cfg, const NestedSequence& ns);

/// Face constraint when b+(ambient) = 1.
ConstraintSet bplus1_summary(const SurfaceConfig& cfg, const NestedSequence& ns);

struct SimplexVertices {
  RMatrix directions;            // exact, vertex i is opposite wall i
  std::vector<Rational> norms;   // Q(direction, direction) > 0
  std::vector<HPoint> vertices;
};

/// Vertices of the simplex bounded by the walls v_i^perp. Throws
/// PreconditionError naming I when some V_I with |I| = n is not negative
/// definite, DegenerateSimplexError when the vertices are dependent.
SimplexVertices simplex_from_walls(const SurfaceConfig& cfg);

bool is_bounded_config(const SurfaceConfig& cfg);

/// dim Gr+(ambient) - sum_i dim Gr+(P_i), with dim Gr+(p, q) = p q.
long product_codim(const SurfaceConfig& cfg, const NestedSequence& ns);

/// Nearest point of the simplex to p (n = 2 only).
HPoint retract_to_simplex(const SurfaceConfig& cfg, const HPoint& p);

/// Shoelace area of the Klein-model polygon through the summary points of
/// the six vertex faces of the hexagon, in cyclic order. Only meaningful
/// for n = 2 configurations; faces whose summary is not a single point are
/// skipped.
double enclosed_klein_area(const SurfaceConfig& cfg);

}  // namespace periodmap

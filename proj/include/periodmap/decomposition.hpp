#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "periodmap/bilinear.hpp"

namespace periodmap {

/// Pairing data for a splitting X = X1 u_Y X2: H1, H2 are the classes
/// supported in each piece, D models the image of the connecting map.
struct DecompositionData {
  FormPtr ambient;
  Subspace H1;
  Subspace H2;
  Subspace D;
  std::size_t bhat1 = 0;
  std::size_t bhat2 = 0;
};

struct ValidationIssue {
  std::string condition;
  RVector witness_a;
  RVector witness_b;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
};

ValidationReport validate(const DecompositionData& data);

/// dim = bhat1 + bhat2 + 2 dim D. Throws PreconditionError on invalid data.
bool check_betti_identity(const DecompositionData& data);

/// b+ and b- of the ambient split as b(H1) + b(H2) + dim D.
bool check_bpm_identity(const DecompositionData& data);

struct HyperbolicComplement {
  Subspace W;
  std::vector<RVector> duals;  // duals[i] pairs to 1 with D.basis()[i]
  RMatrix pairing_matrix;      // Q on the basis (D.basis(), duals)
};

HyperbolicComplement hyperbolic_complement(const DecompositionData& data);

/// H1plus + D + H2plus. H1plus must be positive definite of dimension b+(H1)
/// inside H1 + D (and likewise for H2plus).
Subspace limit_period_subspace(const DecompositionData& data, const Subspace& H1plus,
                               const Subspace& H2plus);

/// Uses max_positive_subspace of H1 and H2.
Subspace limit_period_subspace(const DecompositionData& data);

/// Random valid data with ambient dim <= max_dim, block-built then
/// conjugated by a random unimodular matrix.
struct FuzzCase {
  DecompositionData data;
  RMatrix unimodular;  // the conjugating matrix U (ambient gram = U^T G0 U)
};

FuzzCase random_decomposition(std::uint64_t seed, std::size_t max_dim = 8);

}  // namespace periodmap

#pragma once

// JSON forms of the exact data types. Rationals are strings "p/q" (plain
// integers accepted on input); see docs/formats.md.

#include <json.hpp>

#include <filesystem>
#include <string>

#include "periodmap/bilinear.hpp"
#include "periodmap/decomposition.hpp"
#include "periodmap/face_constraints.hpp"
#include "periodmap/grassmannian.hpp"
#include "periodmap/systole.hpp"

namespace periodmap::io {

using json = nlohmann::json;

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);
json vector_to_json(const RVector& v);
RVector vector_from_json(const json& j);
json matrix_to_json(const RMatrix& m);
RMatrix matrix_from_json(const json& j);

/// {"dim": n, "gram": [[...]]}; "dim" is optional on input but checked.
json form_to_json(const GramForm& g);
FormPtr form_from_json(const json& j);

/// {"dim": k, "basis": [[...]]}
json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, const FormPtr& ambient);

json decomposition_to_json(const DecompositionData& d);
DecompositionData decomposition_from_json(const json& j);

/// {"gram": [[...]], "vectors": [[...]]}
json config_to_json(const SurfaceConfig& cfg);
SurfaceConfig config_from_json(const json& j);

json signature_to_json(const Signature& s);
json constraint_to_json(const ConstraintSet& c);
json face_to_json(const FaceConstraint& f);
json systole_to_json(const SystoleResult& r);
json cs_to_json(const CsResult& r);

/// Throws InputError when the file is missing or not valid JSON.
json read_json_file(const std::filesystem::path& path);

}  // namespace periodmap::io

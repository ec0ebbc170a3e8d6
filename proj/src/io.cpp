#include "periodmap/io.hpp"

#include <fstream>

#include "periodmap/errors.hpp"

namespace periodmap::io {

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

json vector_to_json(const RVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

RVector vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
  RVector v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

json matrix_to_json(const RMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(vector_to_json(row));
  return out;
}

RMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rows, got " + j.dump());
  RMatrix m;
  for (const auto& row : j) m.push_back(vector_from_json(row));
  for (const auto& row : m)
    if (row.size() != m.front().size()) throw InputError("matrix rows have different lengths");
  return m;
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw InputError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

json form_to_json(const GramForm& g) { return {{"dim", g.dim()}, {"gram", matrix_to_json(g.gram())}}; }

FormPtr form_from_json(const json& j) {
  RMatrix gram = matrix_from_json(field(j, "gram"));
  if (j.contains("dim") && size_field(j, "dim") != gram.size()) throw InputError("\"dim\" does not match the gram matrix");
  return make_form(std::move(gram));
}

json subspace_to_json(const Subspace& s) { return {{"dim", s.dim()}, {"basis", matrix_to_json(s.basis())}}; }

Subspace subspace_from_json(const json& j, const FormPtr& ambient) {
  const RMatrix basis = matrix_from_json(field(j, "basis"));
  for (const auto& row : basis)
    if (row.size() != ambient->dim()) throw InputError("basis vector length does not match the ambient form");
  Subspace s(ambient, basis);
  if (j.contains("dim") && size_field(j, "dim") != s.dim()) throw InputError("\"dim\" does not match the span of the basis");
  return s;
}

json decomposition_to_json(const DecompositionData& d) {
  return {{"ambient", form_to_json(*d.ambient)},
          {"H1", subspace_to_json(d.H1)},
          {"H2", subspace_to_json(d.H2)},
          {"D", subspace_to_json(d.D)},
          {"bhat1", d.bhat1},
          {"bhat2", d.bhat2}};
}

DecompositionData decomposition_from_json(const json& j) {
  const FormPtr ambient = form_from_json(field(j, "ambient"));
  return {ambient,
          subspace_from_json(field(j, "H1"), ambient),
          subspace_from_json(field(j, "H2"), ambient),
          subspace_from_json(field(j, "D"), ambient),
          size_field(j, "bhat1"),
          size_field(j, "bhat2")};
}

json config_to_json(const SurfaceConfig& cfg) {
  return {{"gram", matrix_to_json(cfg.form->gram())}, {"vectors", matrix_to_json(cfg.vectors)}};
}

SurfaceConfig config_from_json(const json& j) {
  return make_config(form_from_json(j), matrix_from_json(field(j, "vectors")));
}

json signature_to_json(const Signature& s) { return {{"plus", s.plus}, {"minus", s.minus}, {"null", s.null}}; }

json constraint_to_json(const ConstraintSet& c) {
  return {{"kind", to_string(c.kind)},
          {"generators", matrix_to_json(c.generators)},
          {"locus", subspace_to_json(c.locus)},
          {"locus_dim", c.locus_dim}};
}

json face_to_json(const FaceConstraint& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces) {
    pieces.push_back({{"dim", p.P.dim()}, {"signature", signature_to_json(p.sig)}, {"Hplus", subspace_to_json(p.Hplus)}});
  }
  json nulls = json::array();
  for (const auto& n : f.nulls) nulls.push_back(n.dim());
  return {{"chain", f.sequence.to_short_string()},
          {"face", f.sequence.to_string()},
          {"codim", f.sequence.length()},
          {"pieces", pieces},
          {"null_dims", nulls},
          {"witness", subspace_to_json(f.witness)},
          {"witness_signature", signature_to_json(f.witness_signature)},
          {"summary", constraint_to_json(f.summary)}};
}

json systole_to_json(const SystoleResult& r) {
  json out = {{"value", r.value},
              {"minimizers", r.minimizers},
              {"lattice_bound", r.lattice_bound},
              {"radius_squared", r.radius_squared},
              {"certification_radius", r.certification_radius},
              {"certified", r.certified}};
  if (r.value_squared) out["value_squared"] = rational_to_json(*r.value_squared);
  return out;
}

json cs_to_json(const CsResult& r) {
  return {{"value", r.value},
          {"point", r.point.coords()},
          {"disk", r.disk},
          {"grid", r.grid},
          {"refine", r.refine},
          {"evaluations", r.evaluations}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace periodmap::io

#include "periodmap/presets.hpp"

#include "periodmap/errors.hpp"

namespace periodmap {

namespace {

SurfaceConfig standard_config(std::initializer_list<std::initializer_list<long>> vs) {
  RMatrix m;
  for (const auto& v : vs) {
    RVector r;
    for (long c : v) r.emplace_back(c);
    m.push_back(std::move(r));
  }
  return make_config(make_diagonal_form({1, -1, -1}), std::move(m));
}

}  // namespace

SurfaceConfig symmetric_family(const Rational& a) {
  if (sgn(a) == 0) throw InputError("symmetric family needs a != 0");
  const Rational half = a / 2;
  RMatrix v{{1, a, 0}, {1, -half, a}, {1, -half, -a}};
  return make_config(make_diagonal_form({1, -1, Rational(-3, 4)}), std::move(v));
}

SurfaceConfig preset_config(std::string_view name, const std::optional<Rational>& a) {
  if (name == "fig6-i") return standard_config({{0, 1, 0}, {0, 0, 1}, {2, 1, 3}});
  if (name == "fig6-ii") return standard_config({{0, 1, 1}, {1, 1, -1}, {2, 1, 2}});
  if (name == "fig6-iii") return standard_config({{0, 1, -1}, {0, 0, 1}, {2, 1, 2}});
  if (name == "fig6-iv") return standard_config({{0, 1, 1}, {3, 1, 3}, {3, -3, 1}});
  if (name == "degenerate") return standard_config({{1, 1, 1}, {0, 1, 1}, {0, 1, -1}});
  if (name == "symmetric") {
    if (!a) throw InputError("preset 'symmetric' needs a value for a");
    return symmetric_family(*a);
  }
  throw InputError("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"fig6-i", "fig6-ii", "fig6-iii", "fig6-iv", "degenerate", "symmetric"};
}

DecompositionData decomposition_preset(std::string_view name) {
  if (name == "cp2-cp2bar") {
    const FormPtr q = make_diagonal_form({-1, 1});
    return {q, Subspace(q, {{0, 1}}), Subspace(q, {{1, 0}}), Subspace::zero(q), 1, 1};
  }
  const FormPtr h = make_form({{0, 1}, {1, 0}});
  if (name == "s2xs2-s1xs2") return {h, Subspace::zero(h), Subspace::zero(h), Subspace(h, {{0, 1}}), 0, 0};
  if (name == "s2xs2-s2xs1") return {h, Subspace::zero(h), Subspace::zero(h), Subspace(h, {{1, 0}}), 0, 0};
  throw InputError("unknown decomposition preset '" + std::string(name) + "'");
}

std::vector<std::string> decomposition_preset_names() { return {"cp2-cp2bar", "s2xs2-s1xs2", "s2xs2-s2xs1"}; }

}  // namespace periodmap

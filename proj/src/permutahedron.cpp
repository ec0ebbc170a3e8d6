#include "periodmap/permutahedron.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "periodmap/errors.hpp"
#include "periodmap/kernels.hpp"

namespace periodmap {

Subset Subset::of(std::initializer_list<int> elements) { return of(std::vector<int>(elements)); }

Subset Subset::of(const std::vector<int>& elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > 32) throw InputError("subset element out of range: " + std::to_string(e));
    bits |= 1u << (e - 1);
  }
  return Subset(bits);
}

Subset Subset::parse(std::string_view text) {
  std::vector<int> elements;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    const auto b = token.find_first_not_of(" {}");
    const auto e = token.find_last_not_of(" {}");
    if (b == std::string::npos) throw InputError("empty subset element in '" + std::string(text) + "'");
    const std::string core = token.substr(b, e - b + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(core, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != core.size()) throw InputError("bad subset element '" + core + "'");
    elements.push_back(value);
  }
  return of(elements);
}

Subset Subset::full(int m) {
  if (m < 1 || m > 32) throw InputError("subset universe out of range");
  return Subset(m == 32 ? ~0u : ((1u << m) - 1));
}

int Subset::size() const noexcept { return std::popcount(bits_); }

bool Subset::contains(int element) const noexcept {
  return element >= 1 && element <= 32 && (bits_ >> (element - 1)) & 1u;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

int Subset::max_element() const noexcept { return bits_ ? 32 - std::countl_zero(bits_) : 0; }

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

std::strong_ordering Subset::operator<=>(const Subset& other) const {
  const auto a = elements();
  const auto b = other.elements();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

NestedSequence::NestedSequence(int n, std::vector<Subset> chain) : n_(n), chain_(std::move(chain)) {
  if (n < 1 || n > 31) throw InputError("permutahedron dimension out of range");
  if (chain_.empty() || chain_.size() > static_cast<std::size_t>(n)) {
    throw InputError("nested sequence length must be between 1 and n");
  }
  const Subset all = Subset::full(n + 1);
  for (std::size_t k = 0; k < chain_.size(); ++k) {
    const Subset s = chain_[k];
    if (s.empty() || !s.subset_of(all) || s == all) {
      throw InputError("chain entry " + s.to_string() + " is not a nonempty proper subset");
    }
    if (k > 0 && (!chain_[k - 1].subset_of(s) || chain_[k - 1] == s)) {
      throw InputError("chain is not strictly increasing at " + s.to_string());
    }
  }
}

NestedSequence NestedSequence::parse(int n, std::string_view text) {
  std::vector<Subset> chain;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ';')) chain.push_back(Subset::parse(token));
  return NestedSequence(n, std::move(chain));
}

Subset NestedSequence::at(std::size_t k) const {
  if (k == 0) return Subset{};
  if (k == chain_.size() + 1) return Subset::full(n_ + 1);
  if (k > chain_.size() + 1) throw InputError("chain index out of range");
  return chain_[k - 1];
}

std::string NestedSequence::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < chain_.size(); ++k) {
    if (k) s += " < ";
    s += chain_[k].to_string();
  }
  return s;
}

std::string NestedSequence::to_short_string() const {
  std::string s;
  for (std::size_t k = 0; k < chain_.size(); ++k) {
    if (k) s += ";";
    const auto e = chain_[k].elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e[i]);
    }
  }
  return s;
}

SimplexFace make_simplex_face(int n, Subset I) {
  const Subset all = Subset::full(n + 1);
  if (I.empty() || !I.subset_of(all) || I == all) throw InputError("simplex face needs a nonempty proper subset");
  return {n, I};
}

bool simplex_face_leq(const SimplexFace& a, const SimplexFace& b) {
  if (a.n != b.n) throw InputError("simplex faces of different dimensions");
  return b.I.subset_of(a.I);
}

std::vector<NestedSequence> enumerate_faces(int n, int codim) {
  if (n < 1 || n > 6) throw ResourceError("face enumeration supports 1 <= n <= 6");
  if (codim < 1 || codim > n) throw InputError("codimension must be between 1 and n");
  const std::uint32_t full = Subset::full(n + 1).bits();
  std::vector<Subset> subsets;
  for (std::uint32_t b = 1; b < full; ++b) subsets.emplace_back(b);
  std::sort(subsets.begin(), subsets.end());

  std::vector<NestedSequence> out;
  std::vector<Subset> chain;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(chain.size()) == codim) {
      out.emplace_back(n, chain);
      return;
    }
    for (Subset s : subsets) {
      if (!chain.empty() && (!chain.back().subset_of(s) || chain.back() == s)) continue;
      chain.push_back(s);
      extend();
      chain.pop_back();
    }
  };
  extend();
  std::sort(out.begin(), out.end());
  return out;
}

bool face_leq(const NestedSequence& a, const NestedSequence& b) {
  if (a.n() != b.n()) throw InputError("faces of permutahedra of different dimensions");
  return std::all_of(b.chain().begin(), b.chain().end(), [&](Subset s) {
    return std::find(a.chain().begin(), a.chain().end(), s) != a.chain().end();
  });
}

SimplexFace forgetful(const NestedSequence& ns) { return {ns.n(), ns.last()}; }

std::vector<std::size_t> PermRealization::face_vertices(const NestedSequence& ns) const {
  if (ns.n() != n) throw InputError("face belongs to a different permutahedron");
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    bool inside = true;
    for (Subset s : ns.chain()) {
      int largest = 0;
      for (int i : s.elements()) largest = std::max(largest, vertices[v][static_cast<std::size_t>(i - 1)]);
      if (largest != s.size()) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(v);
  }
  return out;
}

PermRealization realize(int n) {
  if (n < 1) throw InputError("permutahedron dimension must be positive");
  if (n > 6) throw ResourceError("realization is limited to n <= 6");
  PermRealization r{n, {}};
  std::vector<int> p(static_cast<std::size_t>(n + 1));
  std::iota(p.begin(), p.end(), 1);
  do {
    r.vertices.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return r;
}

Vec SimplexRealization::vertex(int k) const {
  Vec x(static_cast<std::size_t>(n + 1), lower);
  x.at(static_cast<std::size_t>(k)) = coordinate_sum - n * lower;
  return x;
}

SimplexRealization realize_simplex(int n) {
  if (n < 1) throw InputError("simplex dimension must be positive");
  if (n > 6) throw ResourceError("realization is limited to n <= 6");
  return {n, (n + 1) * (n + 2) / 2.0, 1.0};
}

double facet_slack(const Vec& x, Subset S) {
  double s = 0;
  for (int i : S.elements()) s += x.at(static_cast<std::size_t>(i - 1));
  const int k = S.size();
  return s - k * (k + 1) / 2.0;
}

namespace {

void require_point(const Vec& x, int n) {
  if (n < 1 || x.size() != static_cast<std::size_t>(n + 1)) {
    throw InputError("point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(n + 1));
  }
}

double coordinate_sum(int n) { return (n + 1) * (n + 2) / 2.0; }

}  // namespace

bool in_simplex(const Vec& x, int n, double tol) {
  require_point(x, n);
  const double s = std::accumulate(x.begin(), x.end(), 0.0);
  if (std::abs(s - coordinate_sum(n)) > tol * std::max(1.0, coordinate_sum(n))) return false;
  return std::all_of(x.begin(), x.end(), [tol](double c) { return c >= 1.0 - tol; });
}

bool in_permutahedron(const Vec& x, int n, double tol) {
  if (!in_simplex(x, n, tol)) return false;
  const std::uint32_t full = Subset::full(n + 1).bits();
  for (std::uint32_t b = 1; b < full; ++b)
    if (facet_slack(x, Subset(b)) < -tol) return false;
  return true;
}

std::vector<Subset> tight_sets(const Vec& x, int n, double tol) {
  require_point(x, n);
  std::vector<Subset> out;
  const std::uint32_t full = Subset::full(n + 1).bits();
  for (std::uint32_t b = 1; b < full; ++b)
    if (std::abs(facet_slack(x, Subset(b))) <= tol) out.emplace_back(b);
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  return out;
}

Vec closest_point_map(const Vec& x, const PermRealization& r) {
  const int n = r.n;
  require_point(x, n);
  if (!in_simplex(x, n)) throw DomainError("point is not in the simplex");
  const std::size_t m = x.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });

  // Decreasing isotonic fit of s_k = x_(k) - (n+1-k) by pooling adjacent violators.
  std::vector<double> sums, counts;
  for (std::size_t k = 0; k < m; ++k) {
    sums.push_back(x[order[k]] - static_cast<double>(m - k));
    counts.push_back(1);
    while (sums.size() > 1 && sums[sums.size() - 2] / counts[counts.size() - 2] < sums.back() / counts.back()) {
      sums[sums.size() - 2] += sums.back();
      counts[counts.size() - 2] += counts.back();
      sums.pop_back();
      counts.pop_back();
    }
  }
  Vec p(m);
  std::size_t k = 0;
  for (std::size_t blk = 0; blk < sums.size(); ++blk) {
    const double v = sums[blk] / counts[blk];
    for (int c = 0; c < static_cast<int>(counts[blk]); ++c, ++k) p[order[k]] = x[order[k]] - v;
  }
  return p;
}

Vec forgetful_map(const Vec& x, int n) {
  require_point(x, n);
  const std::size_t m = x.size();
  const std::uint32_t full = Subset::full(n + 1).bits();
  Vec c(m, std::numeric_limits<double>::infinity());
  for (std::uint32_t b = 1; b < full; ++b) {
    const double s = std::max(0.0, facet_slack(x, Subset(b)));
    for (std::size_t i = 0; i < m; ++i)
      if ((b >> i) & 1u) c[i] = std::min(c[i], s);
  }
  const double total = std::accumulate(c.begin(), c.end(), 0.0);
  if (!(total > 0)) throw DomainError("point is outside the permutahedron");
  const double target = n * (n + 1) / 2.0;
  Vec y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = 1.0 + c[i] * target / total;
  return y;
}

Vec to_barycentric(const Vec& x, int n) {
  require_point(x, n);
  const double scale = n * (n + 1) / 2.0;
  Vec l(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) l[i] = (x[i] - 1.0) / scale;
  return l;
}

Vec from_barycentric(const Vec& lambda, int n) {
  require_point(lambda, n);
  const double scale = n * (n + 1) / 2.0;
  Vec x(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) x[i] = 1.0 + lambda[i] * scale;
  return x;
}

std::vector<Vec> simplex_grid(int n, int K) {
  if (K < 1) throw InputError("grid resolution must be positive");
  std::vector<Vec> out;
  std::vector<int> k(static_cast<std::size_t>(n + 1), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      k[static_cast<std::size_t>(n)] = left;
      Vec l(k.size());
      for (std::size_t i = 0; i < k.size(); ++i) l[i] = static_cast<double>(k[i]) / K;
      out.push_back(from_barycentric(l, n));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, K);
  return out;
}

CoverageReport check_face_mapping_surjectivity(const PolytopeMap& f, int n, double grid_step,
                                               const CoverageOptions& opts) {
  if (n < 1) throw InputError("dimension must be positive");
  if (n > 3) throw ResourceError("coverage check is limited to n <= 3");
  if (!(grid_step > 0) || grid_step > 1) throw InputError("grid step must be in (0, 1]");
  if (opts.oversample < 1) throw InputError("oversample must be >= 1");

  CoverageReport report;
  const PermRealization real = realize(n);

  // (a) face condition on boundary samples of every facet.
  std::mt19937_64 rng(opts.seed);
  std::exponential_distribution<double> expo(1.0);
  for (const auto& facet : enumerate_faces(n, 1)) {
    const auto idx = real.face_vertices(facet);
    std::vector<Vec> pts;
    for (auto v : idx) pts.emplace_back(real.vertices[v].begin(), real.vertices[v].end());
    for (int s = 0; s < opts.boundary_samples; ++s) {
      Vec w(idx.size());
      double total = 0;
      for (auto& c : w) total += (c = expo(rng));
      Vec p(static_cast<std::size_t>(n + 1), 0.0);
      for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += w[j] / total * real.vertices[idx[j]][i];
      pts.push_back(std::move(p));
    }
    for (const auto& p : pts) {
      const Vec lam = to_barycentric(f(p), n);
      bool ok = std::abs(std::accumulate(lam.begin(), lam.end(), 0.0) - 1.0) <= opts.face_tolerance;
      for (std::size_t i = 0; i < lam.size() && ok; ++i) {
        if (lam[i] < -opts.face_tolerance) ok = false;
        if (facet.last().contains(static_cast<int>(i) + 1) && std::abs(lam[i]) > opts.face_tolerance) ok = false;
      }
      if (!ok) {
        report.face_condition_ok = false;
        report.violating_face = facet;
        report.violating_point = p;
        break;
      }
    }
    if (!report.face_condition_ok) break;
  }

  // (b) grid coverage.
  const int K = std::max(1, static_cast<int>(std::lround(1.0 / grid_step)));
  const double h = 1.0 / K;
  std::vector<Vec> grid;
  for (const auto& x : simplex_grid(n, K)) grid.push_back(to_barycentric(x, n));
  std::vector<Vec> samples;
  for (auto& x : simplex_grid(n, K * opts.oversample))
    if (in_permutahedron(x, n, 1e-12)) samples.push_back(std::move(x));

  auto images = opts.parallel ? kernels::map_points_parallel(f, samples) : kernels::map_points_serial(f, samples);
  for (auto& y : images) y = to_barycentric(y, n);

  const auto cov = opts.parallel ? kernels::coverage_parallel(grid, images, h) : kernels::coverage_serial(grid, images, h);
  report.grid_points = grid.size();
  report.samples = samples.size();
  report.worst_gap = cov.worst_gap;
  if (cov.first_uncovered) {
    report.covered = false;
    report.uncovered_witness = grid[*cov.first_uncovered];
  }
  return report;
}

}  // namespace periodmap

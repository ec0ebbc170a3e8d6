#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace periodmap {

using Vec = std::vector<double>;

/// Subset of {1, ..., 32} as a bitmask (element i is bit i-1). Ordered
/// lexicographically on the sorted element lists.
class Subset {
 public:
  constexpr Subset() = default;
  explicit constexpr Subset(std::uint32_t bits) : bits_(bits) {}
  static Subset of(std::initializer_list<int> elements);
  static Subset of(const std::vector<int>& elements);
  /// "1,2,4"
  static Subset parse(std::string_view text);
  static Subset full(int m);

  std::uint32_t bits() const noexcept { return bits_; }
  int size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(int element) const noexcept;
  bool subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  std::vector<int> elements() const;
  int max_element() const noexcept;

  /// "{1,2}"
  std::string to_string() const;

  bool operator==(const Subset&) const = default;
  std::strong_ordering operator<=>(const Subset& other) const;

 private:
  std::uint32_t bits_ = 0;
};

/// Strictly increasing chain of nonempty proper subsets of {1, ..., n+1}.
class NestedSequence {
 public:
  NestedSequence(int n, std::vector<Subset> chain);
  /// "1;1,2" -> {1} < {1,2}
  static NestedSequence parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  const std::vector<Subset>& chain() const noexcept { return chain_; }
  std::size_t length() const noexcept { return chain_.size(); }
  Subset last() const { return chain_.back(); }
  /// I_k with I_0 = {} and I_{l+1} = {1, ..., n+1}; k in [0, l+1].
  Subset at(std::size_t k) const;

  std::string to_string() const;
  /// "1;1,2"
  std::string to_short_string() const;

  bool operator==(const NestedSequence&) const = default;
  auto operator<=>(const NestedSequence&) const = default;

 private:
  int n_;
  std::vector<Subset> chain_;
};

/// Face F_I of the simplex, codimension |I|.
struct SimplexFace {
  int n;
  Subset I;

  std::size_t codim() const { return static_cast<std::size_t>(I.size()); }
  bool operator==(const SimplexFace&) const = default;
};

SimplexFace make_simplex_face(int n, Subset I);
/// F_a contained in F_b, i.e. b.I subset of a.I.
bool simplex_face_leq(const SimplexFace& a, const SimplexFace& b);

/// All chains of length codim, lexicographic on the subset lists.
std::vector<NestedSequence> enumerate_faces(int n, int codim);

/// a <= b iff b's chain is a subset of a's chain.
bool face_leq(const NestedSequence& a, const NestedSequence& b);

SimplexFace forgetful(const NestedSequence& ns);

/// P_n as the convex hull of the permutations of (1, ..., n+1), lying in the
/// hyperplane sum x = (n+1)(n+2)/2. The simplex is {x_i >= 1} in the same
/// hyperplane, and P_n is its truncation by sum_{i in S} x_i >= |S|(|S|+1)/2.
struct PermRealization {
  int n;
  std::vector<std::vector<int>> vertices;  // vertex v has coordinate v[i] at i

  double coordinate_sum() const { return (n + 1) * (n + 2) / 2.0; }
  /// Indices of the vertices of F_I.
  std::vector<std::size_t> face_vertices(const NestedSequence& ns) const;
};

/// Throws ResourceError for n > 6.
PermRealization realize(int n);

struct SimplexRealization {
  int n;
  double coordinate_sum;  // sum of x
  double lower;           // x_i >= lower
  /// Vertex k (0-based) is the corner where x_k is largest.
  Vec vertex(int k) const;
};

SimplexRealization realize_simplex(int n);

/// Slack of the facet inequality for S at x (zero on the facet).
double facet_slack(const Vec& x, Subset S);

bool in_simplex(const Vec& x, int n, double tol = 1e-9);
bool in_permutahedron(const Vec& x, int n, double tol = 1e-9);

/// Tight facets of a point of P_n, as a chain (empty for interior points).
std::vector<Subset> tight_sets(const Vec& x, int n, double tol = 1e-9);

/// Euclidean nearest point of P_n to x in the simplex (isotonic regression).
Vec closest_point_map(const Vec& x, const PermRealization& r);

/// Continuous collapse P_n -> simplex: y_i is the smallest facet slack over
/// proper S containing i, rescaled onto the simplex. Sends F_I into F_{I_l}.
Vec forgetful_map(const Vec& x, int n);

/// Normalized barycentric coordinates (x_i - 1) / (n(n+1)/2).
Vec to_barycentric(const Vec& x, int n);
Vec from_barycentric(const Vec& lambda, int n);

using PolytopeMap = std::function<Vec(const Vec&)>;

struct CoverageOptions {
  int oversample = 8;             // P sample spacing is grid_step / oversample
  int boundary_samples = 64;      // random points per facet for the face check
  std::uint64_t seed = 0x5eed;
  double face_tolerance = 1e-9;
  bool parallel = true;
};

struct CoverageReport {
  bool face_condition_ok = true;
  std::optional<NestedSequence> violating_face;
  Vec violating_point;
  bool covered = true;
  std::optional<Vec> uncovered_witness;  // barycentric grid point
  std::size_t grid_points = 0;
  std::size_t samples = 0;
  double worst_gap = 0;  // largest grid-point-to-image distance (barycentric)

  bool ok() const noexcept { return face_condition_ok && covered; }
};

/// Grid coverage proxy for surjectivity of f: P_n -> simplex (n <= 3).
/// Distances and grid_step are in normalized barycentric coordinates.
CoverageReport check_face_mapping_surjectivity(const PolytopeMap& f, int n, double grid_step,
                                               const CoverageOptions& opts = {});

/// Barycentric lattice points of the simplex at spacing 1/K, in x coordinates.
std::vector<Vec> simplex_grid(int n, int K);

}  // namespace periodmap

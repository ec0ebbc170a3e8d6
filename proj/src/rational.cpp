#include "periodmap/rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "periodmap/errors.hpp"

namespace periodmap {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

void require_same_length(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) {
    throw InputError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw InputError("not a rational: '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(mpz_class(n), 1);
  } else {
    std::string d(den.front() == '+' ? den.substr(1) : den);
    mpz_class dz(d);
    if (dz == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
    q = Rational(mpz_class(n), dz);
  }
  q.canonicalize();
  return q;
}

RVector parse_vector(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) throw InputError("empty vector");
  RVector v;
  for (auto part : split(s, ',')) v.push_back(parse_rational(part));
  return v;
}

RMatrix parse_matrix(std::string_view text) {
  RMatrix m;
  for (auto row : split(trim(text), ';')) m.push_back(parse_vector(row));
  for (const auto& row : m) {
    if (row.size() != m.front().size()) throw InputError("ragged matrix");
  }
  return m;
}

double to_double(const Rational& q) { return q.get_d(); }

std::vector<double> to_double(const RVector& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](const Rational& q) { return q.get_d(); });
  return out;
}

RVector zero_vector(std::size_t n) { return RVector(n, Rational(0)); }

RVector unit_vector(std::size_t n, std::size_t i) {
  RVector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

RMatrix identity_matrix(std::size_t n) {
  RMatrix m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(unit_vector(n, i));
  return m;
}

RMatrix diagonal_matrix(const RVector& diagonal) {
  RMatrix m(diagonal.size(), zero_vector(diagonal.size()));
  for (std::size_t i = 0; i < diagonal.size(); ++i) m[i][i] = diagonal[i];
  return m;
}

bool is_zero(const RVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational euclidean_dot(const RVector& a, const RVector& b) {
  require_same_length(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVector add(const RVector& a, const RVector& b) {
  require_same_length(a, b);
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVector sub(const RVector& a, const RVector& b) {
  require_same_length(a, b);
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVector scale(const Rational& s, const RVector& v) {
  RVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RVector axpy(const RVector& v, const Rational& s, const RVector& w) {
  require_same_length(v, w);
  RVector r(v);
  if (sgn(s) == 0) return r;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] += s * w[i];
  return r;
}

RMatrix transpose(const RMatrix& m) {
  if (m.empty()) return {};
  RMatrix t(m.front().size(), RVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RMatrix multiply(const RMatrix& a, const RMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = a.front().size();
  if (inner != b.size()) throw InputError("matrix shape mismatch in multiply");
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  RMatrix c(a.size(), zero_vector(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RVector multiply(const RMatrix& a, const RVector& v) {
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = euclidean_dot(a[i], v);
  return r;
}

Echelon rref(RMatrix rows, std::size_t ncols) {
  for (const auto& r : rows) {
    if (r.size() != ncols) throw InputError("row length does not match column count");
  }
  Echelon e;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const Rational inv = 1 / rows[lead][col];
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || sgn(rows[r][col]) == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[lead][c];
    }
    e.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  e.rows = std::move(rows);
  return e;
}

std::size_t rank(const RMatrix& rows, std::size_t ncols) { return rref(rows, ncols).pivots.size(); }

RMatrix kernel(const RMatrix& rows, std::size_t ncols) {
  const Echelon e = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RVector v = zero_vector(ncols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_subset(const RMatrix& vectors, std::size_t ncols) {
  std::vector<std::size_t> keep;
  RMatrix acc;
  std::size_t current = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    acc.push_back(vectors[i]);
    const std::size_t r = rank(acc, ncols);
    if (r > current) {
      keep.push_back(i);
      current = r;
    } else {
      acc.pop_back();
    }
  }
  return keep;
}

std::optional<RMatrix> inverse(const RMatrix& m) {
  const std::size_t n = m.size();
  RMatrix aug(n, zero_vector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InputError("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  Echelon e = rref(std::move(aug), 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RMatrix inv(n, RVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

Rational determinant(const RMatrix& m) {
  RMatrix a = m;
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

std::optional<RVector> solve(const RMatrix& a, const RVector& b) {
  if (a.size() != b.size()) throw InputError("solve: right-hand side length mismatch");
  if (a.empty()) return RVector{};
  const std::size_t n = a.front().size();
  RMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Echelon e = rref(std::move(aug), n + 1);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  RVector x = zero_vector(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rows[r][n];
  return x;
}

mpz_class common_denominator(const RVector& v) {
  mpz_class l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

RVector primitive_integer(const RVector& v) {
  if (is_zero(v)) return v;
  const mpz_class l = common_denominator(v);
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& q : v) {
    mpz_class z = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(std::move(z));
  }
  const auto first = std::find_if(ints.begin(), ints.end(), [](const mpz_class& z) { return z != 0; });
  if (*first < 0) g = -g;
  RVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

}  // namespace periodmap

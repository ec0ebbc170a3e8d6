#pragma once

// Exact rational vectors and matrices over GMP, plus the handful of row
// reduction routines every other module is built on.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace periodmap {

using Rational = mpq_class;
using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;  // row-major, all rows the same length

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const RVector& v);

/// Accepts "p", "-p", "p/q"; throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// Comma separated rationals, e.g. "1,-1/2,3".
RVector parse_vector(std::string_view text);

/// Semicolon separated rows, e.g. "1,0;0,-1".
RMatrix parse_matrix(std::string_view text);

double to_double(const Rational& q);
std::vector<double> to_double(const RVector& v);

RVector zero_vector(std::size_t n);
RVector unit_vector(std::size_t n, std::size_t i);
RMatrix identity_matrix(std::size_t n);
RMatrix diagonal_matrix(const RVector& diagonal);

bool is_zero(const RVector& v);
Rational euclidean_dot(const RVector& a, const RVector& b);

RVector add(const RVector& a, const RVector& b);
RVector sub(const RVector& a, const RVector& b);
RVector scale(const Rational& s, const RVector& v);
/// v + s * w
RVector axpy(const RVector& v, const Rational& s, const RVector& w);

RMatrix transpose(const RMatrix& m);
RMatrix multiply(const RMatrix& a, const RMatrix& b);
RVector multiply(const RMatrix& a, const RVector& v);

/// Reduced row-echelon form. Zero rows are dropped; pivot columns are
/// ascending, so the result is a canonical representative of the row space.
struct Echelon {
  RMatrix rows;
  std::vector<std::size_t> pivots;
};
Echelon rref(RMatrix rows, std::size_t ncols);

std::size_t rank(const RMatrix& rows, std::size_t ncols);

/// Basis of {x : rows * x = 0}, one vector per free column.
RMatrix kernel(const RMatrix& rows, std::size_t ncols);

/// Indices of a maximal linearly independent prefix-greedy subset.
std::vector<std::size_t> independent_subset(const RMatrix& vectors, std::size_t ncols);

std::optional<RMatrix> inverse(const RMatrix& m);
Rational determinant(const RMatrix& m);

/// Solves a * x = b for one solution, or nullopt when inconsistent.
std::optional<RVector> solve(const RMatrix& a, const RVector& b);

/// Rescales v to a primitive integer vector whose first nonzero entry is
/// positive. Zero stays zero.
RVector primitive_integer(const RVector& v);

/// Least common multiple of all denominators.
mpz_class common_denominator(const RVector& v);

}  // namespace periodmap

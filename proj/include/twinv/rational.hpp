#pragma once

// Exact rational scalars, vectors and small dense matrices.
//
// Everything in the library that is not a pure integer root coordinate goes
// through these types. There is no floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace twinv {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always emits "p/q", with q = 1 for integers.
std::string to_pq_string(const Rational& r);

/// Element of the rational span of the simple roots, in simple-root coordinates.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static RationalVector from_ints(const std::vector<int>& v);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& s);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend RationalVector operator-(RationalVector a) { return a *= Rational(-1); }
  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }

  /// "a1 + 1/2 a2" style rendering for text reports.
  std::string to_string() const;
  /// Comma separated "p/q" tokens.
  std::vector<std::string> to_pq_strings() const;

 private:
  std::vector<Rational> coords_;
};

/// Parses comma separated rationals ("1,-1/2,3").
RationalVector parse_rational_vector(std::string_view text);

/// Row-major dense rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RationalVector apply(const RationalVector& v) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank of the span of the given vectors.
std::size_t span_rank(const std::vector<RationalVector>& vectors);

/// Returns a maximal linearly independent subset, keeping the input order.
std::vector<RationalVector> independent_subset(const std::vector<RationalVector>& vectors);

/// True iff v lies in the span of basis (basis need not be independent).
bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v);

/// Subspace equality of two spans.
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);

/// Solves a * x = b for square invertible a. Throws std::domain_error if singular.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);

}  // namespace twinv

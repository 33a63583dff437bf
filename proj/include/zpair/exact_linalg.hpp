#pragma once

// Exact linear algebra over the rationals.
//
// All routines are deterministic: pivots are chosen as the first nonzero
// entry in column order, and every returned basis is normalized so each
// vector is a primitive integer vector whose first nonzero entry is
// positive.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace zpair {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  /// Builds a matrix whose rows are `rows`; each must have length `cols`.
  static QMatrix from_rows(std::span<const QVector> rows, std::size_t cols);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  /// Matrix-vector product m * v.
  QVector apply(std::span<const Rational> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// A list of linearly independent vectors spanning a subspace of Q^n.
struct QVectorBasis {
  std::size_t ambient_dim = 0;
  std::vector<QVector> vectors;

  std::size_t size() const noexcept { return vectors.size(); }
  bool empty() const noexcept { return vectors.empty(); }
};

/// Rank over Q by fraction-free (Bareiss) elimination on integer rows.
std::size_t rank(const QMatrix& m);

/// Basis of the right null space {v : m v = 0}. One vector per free column,
/// in increasing column order.
QVectorBasis kernel_basis(const QMatrix& m);

/// Canonical basis (the nonzero rows of the reduced row echelon form,
/// primitive-normalized) of the span of arbitrary vectors.
QVectorBasis span_of(std::size_t ambient_dim, std::span<const QVector> vectors);

QVectorBasis intersect_subspaces(const QVectorBasis& a, const QVectorBasis& b);

bool in_span(std::span<const Rational> v, const QVectorBasis& b);

/// Scales v to a primitive integer vector with first nonzero entry positive.
/// The zero vector is returned unchanged.
QVector primitive(std::span<const Rational> v);

bool is_zero(std::span<const Rational> v);

/// Parses "p" or "p/q" (optional sign) into a canonical rational.
/// Returns false on malformed text or a zero denominator.
bool parse_rational(const std::string& text, Rational& out);

}  // namespace zpair

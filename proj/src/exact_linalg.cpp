#include "zpair/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "zpair/error.hpp"

namespace zpair {

namespace {

using IntegerRow = std::vector<Integer>;

// Clears denominators: the returned integer row is a positive multiple of
// the input, so it spans the same line.
IntegerRow integer_row(std::span<const Rational> row) {
  Integer common = 1;
  for (const auto& e : row) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), e.get_den_mpz_t());
  }
  IntegerRow out;
  out.reserve(row.size());
  for (const auto& e : row) {
    Integer v = e.get_num() * (common / e.get_den());
    out.push_back(std::move(v));
  }
  return out;
}

struct IntegerEchelon {
  std::vector<IntegerRow> rows;      // nonzero rows only
  std::vector<std::size_t> pivots;   // pivot column of each row
};

IntegerEchelon bareiss_echelon(const QMatrix& m) {
  IntegerEchelon out;
  std::vector<IntegerRow>& rows = out.rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(integer_row(m.row(r)));

  const std::size_t ncols = m.cols();
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);

    const Integer& pivot = rows[r][col];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const Integer factor = rows[i][col];
      for (std::size_t j = col + 1; j < ncols; ++j) {
        Integer v = pivot * rows[i][j] - factor * rows[r][j];
        // Sylvester's identity makes this division exact.
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        rows[i][j] = std::move(v);
      }
      rows[i][col] = 0;
    }
    previous = pivot;
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return out;
}

// Reduced row echelon form over Q; rows[k] has a 1 at pivots[k] and zeros
// in every other pivot column.
struct ReducedEchelon {
  std::vector<QVector> rows;
  std::vector<std::size_t> pivots;
};

ReducedEchelon reduced_echelon(const QMatrix& m) {
  IntegerEchelon ech = bareiss_echelon(m);
  ReducedEchelon out;
  out.pivots = ech.pivots;
  out.rows.reserve(ech.rows.size());
  for (const auto& irow : ech.rows) {
    QVector row;
    row.reserve(irow.size());
    for (const auto& e : irow) row.emplace_back(e);
    out.rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < out.rows.size(); ++k) {
    const std::size_t pc = out.pivots[k];
    QVector& row = out.rows[k];
    const Rational inv = 1 / row[pc];
    for (auto& e : row) e *= inv;
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
      if (i == k || out.rows[i][pc] == 0) continue;
      const Rational factor = out.rows[i][pc];
      for (std::size_t j = 0; j < row.size(); ++j) {
        out.rows[i][j] -= factor * row[j];
      }
    }
  }
  return out;
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix QMatrix::from_rows(std::span<const QVector> rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("row " + std::to_string(r) + " has length " +
                           std::to_string(rows[r].size()) + ", expected " +
                           std::to_string(cols));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + r * cols);
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVector QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::size_t rank(const QMatrix& m) { return bareiss_echelon(m).rows.size(); }

QVectorBasis kernel_basis(const QMatrix& m) {
  ReducedEchelon rref = reduced_echelon(m);
  QVectorBasis out;
  out.ambient_dim = m.cols();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto pc : rref.pivots) is_pivot[pc] = true;

  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < rref.rows.size(); ++k) {
      v[rref.pivots[k]] = -rref.rows[k][f];
    }
    out.vectors.push_back(primitive(v));
  }
  return out;
}

QVectorBasis span_of(std::size_t ambient_dim, std::span<const QVector> vectors) {
  QVectorBasis out;
  out.ambient_dim = ambient_dim;
  if (vectors.empty()) return out;
  ReducedEchelon rref = reduced_echelon(QMatrix::from_rows(vectors, ambient_dim));
  for (const auto& row : rref.rows) out.vectors.push_back(primitive(row));
  return out;
}

QVectorBasis intersect_subspaces(const QVectorBasis& a, const QVectorBasis& b) {
  if (a.ambient_dim != b.ambient_dim) {
    throw DimensionError("cannot intersect subspaces of Q^" +
                         std::to_string(a.ambient_dim) + " and Q^" +
                         std::to_string(b.ambient_dim));
  }
  const std::size_t n = a.ambient_dim;
  QVectorBasis out;
  out.ambient_dim = n;
  if (a.empty() || b.empty()) return out;

  // Columns a_1..a_p, -b_1..-b_q; a kernel vector (alpha, beta) gives the
  // common vector sum alpha_i a_i.
  const std::size_t p = a.size();
  const std::size_t q = b.size();
  QMatrix m(n, p + q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.vectors[i][r];
  }
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t r = 0; r < n; ++r) m(r, p + j) = -b.vectors[j][r];
  }

  std::vector<QVector> common;
  for (const auto& coeffs : kernel_basis(m).vectors) {
    QVector v(n);
    for (std::size_t i = 0; i < p; ++i) {
      if (coeffs[i] == 0) continue;
      for (std::size_t r = 0; r < n; ++r) v[r] += coeffs[i] * a.vectors[i][r];
    }
    if (!is_zero(v)) common.push_back(std::move(v));
  }
  return span_of(n, common);
}

bool in_span(std::span<const Rational> v, const QVectorBasis& b) {
  if (v.size() != b.ambient_dim) {
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " tested against a basis of Q^" +
                         std::to_string(b.ambient_dim));
  }
  if (is_zero(v)) return true;
  if (b.empty()) return false;
  std::vector<QVector> rows = b.vectors;
  const std::size_t before = rank(QMatrix::from_rows(rows, b.ambient_dim));
  rows.emplace_back(v.begin(), v.end());
  return rank(QMatrix::from_rows(rows, b.ambient_dim)) == before;
}

QVector primitive(std::span<const Rational> v) {
  if (is_zero(v)) return QVector(v.begin(), v.end());
  IntegerRow ints = integer_row(v);
  Integer g = 0;
  for (const auto& e : ints) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  }
  const auto first = std::find_if(ints.begin(), ints.end(),
                                  [](const Integer& e) { return e != 0; });
  if (*first < 0) g = -g;
  QVector out;
  out.reserve(ints.size());
  for (const auto& e : ints) out.emplace_back(Integer(e / g));
  return out;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& e) { return e == 0; });
}

bool parse_rational(const std::string& text, Rational& out) {
  if (text.empty()) return false;
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);

  auto valid_integer = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!valid_integer(num, true) || !valid_integer(den, false)) return false;

  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) return false;
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

}  // namespace zpair

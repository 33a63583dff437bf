#pragma once

// Homogeneous forms in x, y, z over Q.
//
// Coefficient vectors of degree-n forms follow one fixed monomial order,
// graded lexicographic with x > y > z. For n = 2 this is
// x^2, xy, xz, y^2, yz, z^2.

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zpair/exact_linalg.hpp"

namespace zpair {

struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  unsigned z = 0;

  unsigned degree() const noexcept { return x + y + z; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// (n+1)(n+2)/2
std::size_t monomial_count(unsigned degree) noexcept;

/// All degree-n monomials in the canonical order.
std::vector<Monomial> monomials(unsigned degree);

/// Position of m among monomials(m.degree()).
std::size_t monomial_index(const Monomial& m) noexcept;

/// A point of the projective plane, stored as its canonical representative:
/// coprime integers with first nonzero coordinate positive.
class ProjPoint {
 public:
  /// Throws InputError when all coordinates vanish.
  ProjPoint(const Rational& x, const Rational& y, const Rational& z);

  const Integer& x() const noexcept { return coords_[0]; }
  const Integer& y() const noexcept { return coords_[1]; }
  const Integer& z() const noexcept { return coords_[2]; }
  const std::array<Integer, 3>& coords() const noexcept { return coords_; }

  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic on canonical coordinates.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::array<Integer, 3> coords_;
};

class HomPoly {
 public:
  /// The zero form of the given degree.
  explicit HomPoly(unsigned degree = 0);
  /// Coefficients in canonical monomial order; length must match the degree.
  HomPoly(unsigned degree, QVector coefficients);

  static HomPoly constant(const Rational& c);
  static HomPoly monomial(const Monomial& m, const Rational& c = 1);
  /// x, y or z for index 0, 1, 2.
  static HomPoly variable(unsigned index);
  /// a x + b y + c z
  static HomPoly linear(const Rational& a, const Rational& b, const Rational& c);

  unsigned degree() const noexcept { return degree_; }
  const QVector& coefficients() const noexcept { return coeffs_; }
  const Rational& coefficient(const Monomial& m) const;
  bool is_zero() const noexcept;

  /// Primitive integer coefficients, first nonzero coefficient positive.
  HomPoly primitive() const;

  HomPoly operator+(const HomPoly& other) const;
  HomPoly operator-(const HomPoly& other) const;
  HomPoly operator*(const HomPoly& other) const;
  HomPoly scaled(const Rational& factor) const;

  /// Human readable, e.g. "x^2*y + x*y^2 - 5*x*y*z".
  std::string to_string() const;

  friend bool operator==(const HomPoly&, const HomPoly&) = default;

 private:
  unsigned degree_;
  QVector coeffs_;
};

/// Value at the canonical representative of p. Only the zero/nonzero
/// verdict is independent of the representative.
Rational evaluate(const HomPoly& f, const ProjPoint& p);

HomPoly multiply(const HomPoly& f, const HomPoly& g);

/// Row (p^m)_m over all degree-n monomials m in canonical order, evaluated
/// at the canonical representative. Dotting it with the coefficient vector
/// of a degree-n form gives the form's value at p.
QVector monomial_row(unsigned n, const ProjPoint& p);

/// Basis of f * {forms of degree n - deg f}, as degree-n coefficient
/// vectors. Throws DimensionError if deg f > n and InputError if f = 0.
QVectorBasis multiplication_image(const HomPoly& f, unsigned n);

}  // namespace zpair

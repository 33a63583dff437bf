#include "zpair/homogeneous_poly.hpp"

#include <sstream>
#include <utility>

#include "zpair/error.hpp"

namespace zpair {

namespace {

Rational power(const Integer& base, unsigned exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return Rational(out);
}

}  // namespace

std::size_t monomial_count(unsigned degree) noexcept {
  return static_cast<std::size_t>(degree + 1) * (degree + 2) / 2;
}

std::vector<Monomial> monomials(unsigned degree) {
  std::vector<Monomial> out;
  out.reserve(monomial_count(degree));
  for (unsigned a = degree + 1; a-- > 0;) {
    for (unsigned b = degree - a + 1; b-- > 0;) {
      out.push_back({a, b, degree - a - b});
    }
  }
  return out;
}

std::size_t monomial_index(const Monomial& m) noexcept {
  // Monomials with x-exponent > a come first: for each such exponent e
  // there are (n - e + 1) of them.
  const unsigned n = m.degree();
  std::size_t index = 0;
  for (unsigned e = n; e > m.x; --e) index += n - e + 1;
  return index + (n - m.x - m.y);
}

ProjPoint::ProjPoint(const Rational& x, const Rational& y, const Rational& z) {
  const QVector raw{x, y, z};
  if (is_zero(raw)) throw InputError("projective point with all coordinates zero");
  const QVector p = primitive(raw);
  for (std::size_t i = 0; i < 3; ++i) coords_[i] = p[i].get_num();
}

std::string ProjPoint::to_string() const {
  return "[" + coords_[0].get_str() + ":" + coords_[1].get_str() + ":" +
         coords_[2].get_str() + "]";
}

HomPoly::HomPoly(unsigned degree)
    : degree_(degree), coeffs_(monomial_count(degree)) {}

HomPoly::HomPoly(unsigned degree, QVector coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != monomial_count(degree)) {
    throw DimensionError("degree " + std::to_string(degree) + " form needs " +
                         std::to_string(monomial_count(degree)) +
                         " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

HomPoly HomPoly::constant(const Rational& c) { return HomPoly(0, QVector{c}); }

HomPoly HomPoly::monomial(const Monomial& m, const Rational& c) {
  HomPoly f(m.degree());
  f.coeffs_[monomial_index(m)] = c;
  return f;
}

HomPoly HomPoly::variable(unsigned index) {
  Monomial m;
  if (index == 0) m.x = 1;
  else if (index == 1) m.y = 1;
  else m.z = 1;
  return monomial(m);
}

HomPoly HomPoly::linear(const Rational& a, const Rational& b, const Rational& c) {
  return HomPoly(1, QVector{a, b, c});
}

const Rational& HomPoly::coefficient(const Monomial& m) const {
  if (m.degree() != degree_) throw DimensionError("monomial degree mismatch");
  return coeffs_[monomial_index(m)];
}

bool HomPoly::is_zero() const noexcept { return zpair::is_zero(coeffs_); }

HomPoly HomPoly::primitive() const { return HomPoly(degree_, zpair::primitive(coeffs_)); }

HomPoly HomPoly::operator+(const HomPoly& other) const {
  if (other.degree_ != degree_) throw DimensionError("adding forms of different degree");
  HomPoly out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

HomPoly HomPoly::operator-(const HomPoly& other) const {
  return *this + other.scaled(-1);
}

HomPoly HomPoly::operator*(const HomPoly& other) const {
  HomPoly out(degree_ + other.degree_);
  const auto mine = monomials(degree_);
  const auto theirs = monomials(other.degree_);
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < theirs.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      const Monomial m{mine[i].x + theirs[j].x, mine[i].y + theirs[j].y,
                       mine[i].z + theirs[j].z};
      out.coeffs_[monomial_index(m)] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return out;
}

HomPoly HomPoly::scaled(const Rational& factor) const {
  HomPoly out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

std::string HomPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  const auto mons = monomials(degree_);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    Rational c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const Monomial& m = mons[i];
    bool wrote = false;
    if (c != 1 || m.degree() == 0) {
      os << c.get_str();
      wrote = true;
    }
    auto var = [&](char name, unsigned e) {
      if (e == 0) return;
      if (wrote) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      wrote = true;
    };
    var('x', m.x);
    var('y', m.y);
    var('z', m.z);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Rational evaluate(const HomPoly& f, const ProjPoint& p) {
  const QVector row = monomial_row(f.degree(), p);
  Rational acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * f.coefficients()[i];
  return acc;
}

HomPoly multiply(const HomPoly& f, const HomPoly& g) { return f * g; }

QVector monomial_row(unsigned n, const ProjPoint& p) {
  QVector row;
  row.reserve(monomial_count(n));
  for (const auto& m : monomials(n)) {
    row.push_back(power(p.x(), m.x) * power(p.y(), m.y) * power(p.z(), m.z));
  }
  return row;
}

QVectorBasis multiplication_image(const HomPoly& f, unsigned n) {
  if (f.degree() > n) {
    throw DimensionError("form of degree " + std::to_string(f.degree()) +
                         " has no multiples of degree " + std::to_string(n));
  }
  if (f.is_zero()) throw InputError("multiplication image of the zero form");
  QVectorBasis out;
  out.ambient_dim = monomial_count(n);
  // Multiplication by a nonzero form is injective, so the products with the
  // monomials of the complementary degree are independent.
  for (const auto& m : monomials(n - f.degree())) {
    out.vectors.push_back(primitive((f * HomPoly::monomial(m)).coefficients()));
  }
  return out;
}

}  // namespace zpair

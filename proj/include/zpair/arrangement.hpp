#pragma once

// Conic-line arrangements: labeled smooth components (lines and at most one
// smooth conic) with named sub-curves.
//
// File format, one declaration per line, '#' starts a comment:
//
//   line  <LABEL> : <a> <b> <c>               a x + b y + c z
//   conic <LABEL> : <a> <b> <c> <d> <e> <f>   a x^2 + b y^2 + c z^2
//                                             + d xy + e xz + f yz
//   curve <NAME> = <LABEL> <LABEL> ...
//
// Coefficients are integers or fractions p/q.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zpair/homogeneous_poly.hpp"

namespace zpair {

enum class ComponentKind { Line, Conic };

struct Component {
  std::string label;
  ComponentKind kind = ComponentKind::Line;
  HomPoly form;  // primitive integer coefficients, first nonzero positive

  unsigned degree() const noexcept { return form.degree(); }
  bool is_line() const noexcept { return kind == ComponentKind::Line; }
  bool is_conic() const noexcept { return kind == ComponentKind::Conic; }

  /// Throws InputError for the zero form.
  static Component line(std::string label, const Rational& a, const Rational& b,
                        const Rational& c);
  /// Coefficients in file order (x^2, y^2, z^2, xy, xz, yz). Throws
  /// InputError for a singular conic.
  static Component conic(std::string label, std::span<const Rational, 6> coeffs);
  /// Builds a component from a form of degree 1 or 2.
  static Component from_form(std::string label, const HomPoly& form);

  friend bool operator==(const Component&, const Component&) = default;
};

/// Determinant of the symmetric matrix of a conic form, scaled by 8 so it
/// stays integral: det [[2a, d, e], [d, 2b, f], [e, f, 2c]].
Rational conic_discriminant(const HomPoly& q);

/// Conic coefficients in file order (x^2, y^2, z^2, xy, xz, yz).
std::array<Rational, 6> conic_file_coefficients(const HomPoly& q);

/// A named set of components of one arrangement.
struct SubCurve {
  std::string name;
  std::vector<Component> members;

  unsigned degree() const noexcept;
  HomPoly defining_polynomial() const;
  std::vector<std::string> labels() const;
  bool contains(std::string_view label) const noexcept;
};

class Arrangement {
 public:
  Arrangement() = default;
  /// Validates every invariant; throws InputError on violation.
  explicit Arrangement(std::vector<Component> components,
                       std::map<std::string, std::vector<std::string>> subcurves = {});

  const std::vector<Component>& components() const noexcept { return components_; }
  const std::map<std::string, std::vector<std::string>>& subcurves() const noexcept {
    return subcurves_;
  }

  std::size_t size() const noexcept { return components_.size(); }
  std::optional<std::size_t> index_of(std::string_view label) const noexcept;
  /// Throws InputError for an unknown label.
  const Component& component(std::string_view label) const;
  /// nullptr when the arrangement has no conic.
  const Component* conic() const noexcept;
  std::size_t line_count() const noexcept;

  /// Throws InputError for an unknown name.
  SubCurve subcurve(std::string_view name) const;
  /// The whole arrangement as a sub-curve.
  SubCurve as_subcurve(std::string name = "all") const;

  /// Components with the given labels, in arrangement order. Sub-curves
  /// that lose a member are dropped.
  Arrangement restricted(std::span<const std::string> labels) const;
  Arrangement without(std::string_view label) const;

  /// Round-trips through parse() exactly.
  std::string serialize() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<Component> components_;
  std::map<std::string, std::vector<std::string>> subcurves_;
};

/// Parses the text format above. Throws ParseError with line and column.
Arrangement parse(std::string_view text);

/// Reads and parses a file. Throws InputError when unreadable.
Arrangement load_file(const std::string& path);

HomPoly defining_polynomial(const SubCurve& s);
unsigned degree(const SubCurve& s);

}  // namespace zpair

#pragma once

// Intersection points, singular-point classification and the abstract
// incidence structure (combinatorics) of an arrangement.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "zpair/arrangement.hpp"

namespace zpair {

// ---------------------------------------------------------------------------
// Line/conic intersection

struct TwoRational {
  ProjPoint first;
  ProjPoint second;
};

/// Contact point of a tangent line; local multiplicity 2.
struct Tangent {
  ProjPoint point;
};

/// Two conjugate points over Q(sqrt(discriminant)). The discriminant is
/// that of the conic restricted to a parameterization of the line, so only
/// its square class is meaningful.
struct ConjugatePair {
  Rational discriminant;
  std::string line;
  std::string conic;
};

using LineConicOutcome = std::variant<TwoRational, Tangent, ConjugatePair>;

/// Throws InputError unless both are non-proportional lines.
ProjPoint intersect_lines(const Component& l1, const Component& l2);

/// Restricts q to l and classifies by the discriminant of the binary
/// quadratic. Throws InputError unless l is a line and q a conic.
LineConicOutcome intersect_line_conic(const Component& l, const Component& q);

bool tangency(const Component& l, const Component& q);

// ---------------------------------------------------------------------------
// Singular points

enum class LocalKind { Node, Tacnode, OrdinaryMultiple, Other };

struct LocalType {
  LocalKind kind = LocalKind::Node;
  unsigned branches = 2;
  /// Sorted pairwise multiplicities; only meaningful for Other.
  std::vector<unsigned> signature;

  /// "node", "tacnode", "ordinary triple point", "ordinary 4-fold point",
  /// "other(1,2,2)".
  std::string name() const;

  friend auto operator<=>(const LocalType&, const LocalType&) = default;
  friend bool operator==(const LocalType&, const LocalType&) = default;
};

/// Total classification from the pairwise branch multiplicities at a point.
LocalType classify(unsigned branches, std::vector<unsigned> pairwise);

/// One of the two points of a ConjugatePair (index 0 or 1).
struct ConjugateLocation {
  Rational discriminant;
  std::string line;
  std::string conic;
  unsigned index = 0;
};

using LabelPair = std::pair<std::string, std::string>;

struct SingularPoint {
  std::variant<ProjPoint, ConjugateLocation> location;
  std::vector<std::string> branches;           // arrangement order
  std::map<LabelPair, unsigned> pairwise_mult; // keys ordered by arrangement order
  LocalType type;

  bool is_rational() const noexcept { return std::holds_alternative<ProjPoint>(location); }
  /// Throws std::bad_variant_access for conjugate points.
  const ProjPoint& point() const { return std::get<ProjPoint>(location); }
  bool has_branch(std::string_view label) const noexcept;
  /// 0 when either label is not a branch here.
  unsigned multiplicity(std::string_view a, std::string_view b) const;
};

/// Every point where two or more components meet, classified. Rational
/// points come first in lexicographic order of canonical coordinates,
/// followed by conjugate nodes.
std::vector<SingularPoint> singular_points(const Arrangement& a);

struct BezoutCheck {
  std::string first;
  std::string second;
  unsigned expected = 0;  // product of degrees
  unsigned found = 0;     // sum of local multiplicities
  bool ok() const noexcept { return expected == found; }
};

std::vector<BezoutCheck> bezout_checks(const Arrangement& a,
                                       const std::vector<SingularPoint>& points);

// ---------------------------------------------------------------------------
// Combinatorics

struct CombinatorialPoint {
  LocalType type;
  std::vector<std::size_t> components;  // sorted indices
  /// (i, j, multiplicity) with i < j, sorted.
  std::vector<std::tuple<std::size_t, std::size_t, unsigned>> multiplicities;
};

class Combinatorics {
 public:
  std::vector<std::string> labels;
  std::vector<unsigned> degrees;
  std::vector<CombinatorialPoint> points;

  std::size_t size() const noexcept { return labels.size(); }
  /// Throws InputError for an unknown label.
  std::size_t index_of(std::string_view label) const;
};

Combinatorics combinatorics(const Arrangement& a);

/// Coordinate-free invariant of one component: its degree and the sorted
/// multiset of (local type, sorted degrees of the other branches) over the
/// singular points it passes through.
struct Fingerprint {
  unsigned degree = 0;
  std::vector<std::pair<LocalType, std::vector<unsigned>>> incidences;

  std::size_t count(LocalKind kind, unsigned branches = 0) const;
  std::string to_string() const;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint component_fingerprint(const Combinatorics& c, std::string_view label);

/// Pairs (label in c1, label in c2), in c1's component order.
using LabelBijection = std::vector<LabelPair>;

/// Every degree-preserving bijection of components that carries the
/// singular points of c1 onto those of c2 with matching local types and
/// multiplicities. Empty when the combinatorics differ.
std::vector<LabelBijection> equivalences(const Combinatorics& c1, const Combinatorics& c2);

}  // namespace zpair

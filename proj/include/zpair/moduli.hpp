#pragma once

// Connectivity certificates for realization spaces of (k,1)-arrangements,
// and the minimality driver built on them.
//
// A certificate orders the lines transversal to the conic after a base
// (the conic with its tangent lines) so that each added line L_t meets the
// previously placed curve in at most two points of local intersection
// multiplicity >= 2. Tangent lines always go into the base and counting
// starts at the first transversal line.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zpair/arrangement.hpp"
#include "zpair/incidence.hpp"

namespace zpair {

enum class BaseRule {
  /// A smooth conic with at most two tangent lines.
  ConicWithTangents,
  /// A line arrangement with at most nine lines (cited classification).
  PureLinesAtMost9,
};

std::string to_string(BaseRule rule);

inline constexpr const char* kLineClassificationAxiom =
    "line arrangements with at most 9 lines have connected realization spaces "
    "(no Zariski pair of line arrangements below degree 10)";
inline constexpr const char* kOrderingAxiom =
    "ordering criterion: irreducible base and n_t <= 2 for every transversal "
    "line added in order implies an irreducible realization space";
inline constexpr const char* kConicBaseAxiom =
    "a smooth conic with at most two tangent lines has an irreducible realization space";
inline constexpr const char* kRestrictionArgument =
    "a connected realization space restricts to a connected family containing "
    "both sub-curves, so no sub-curve of a certified deletion is a Zariski pair";

struct OrderingCertificate {
  std::vector<std::string> base;
  std::vector<std::string> order;
  std::vector<unsigned> n_values;
  BaseRule base_rule = BaseRule::ConicWithTangents;
};

/// Number of points P on `line` at which the local intersection
/// multiplicity of `line` with the curve formed by `prior` is at least 2.
/// Throws InputError for unknown labels or when `line` is in `prior`.
unsigned n_value(const Combinatorics& c, std::string_view line,
                 const std::set<std::string>& prior);

/// Certified ordering, or std::nullopt when no claim can be made. Throws
/// InputError for more than one conic.
std::optional<OrderingCertificate> connectivity_certificate(const Combinatorics& c);

/// Replays the ordering: recomputes n_values, checks them against the
/// stored ones, the bound 2, transversality and the base rule.
bool revalidate(const Combinatorics& c, const OrderingCertificate& cert);

struct DeletionResult {
  std::string deleted;  // label in the first arrangement
  std::string matched;  // corresponding label in the second
  std::optional<OrderingCertificate> certificate;
  /// Only populated (one level deep) when the deletion is not certified.
  std::vector<DeletionResult> children;

  bool certified() const noexcept { return certificate.has_value(); }
};

struct MinimalityReport {
  LabelBijection equivalence;
  std::vector<DeletionResult> deletions;
  bool minimal = false;
  std::vector<std::string> axioms_used;
};

/// Throws HypothesisError when the arrangements are not combinatorially
/// equivalent.
MinimalityReport minimality_check(const Arrangement& a1, const Arrangement& a2);

}  // namespace zpair

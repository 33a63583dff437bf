#pragma once

// Connected numbers of double covers and Zariski-pair certificates.
//
// For a double cover branched along B (even degree) and a nodal curve C
// meeting B with local multiplicity 2 at every point outside the nodes of
// C, the connected number c(C) is 2 exactly when some curve of degree
// deg(B)/2 passes through every point of B ∩ C without containing a
// component of C, and 1 otherwise.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zpair/arrangement.hpp"
#include "zpair/incidence.hpp"

namespace zpair {

struct SplitHypothesisReport {
  bool b_even_degree = false;
  bool c_nodal_smooth = false;
  bool bc_disjoint_from_nodes_of_c = false;
  bool all_local_mults_two = false;
  /// Every point of B ∩ C is rational.
  bool rational_support = false;
  std::vector<ProjPoint> intersection_points;
  std::vector<std::string> violations;

  bool satisfied() const noexcept {
    return b_even_degree && c_nodal_smooth && bc_disjoint_from_nodes_of_c &&
           all_local_mults_two && rational_support && violations.empty();
  }
};

/// Evaluates the hypotheses for the split (B, C) of `a`. Throws InputError
/// unless B and C are disjoint and together cover `a`.
SplitHypothesisReport check_hypotheses(const Arrangement& a, const SubCurve& b,
                                       const SubCurve& c);

/// Degree-n forms vanishing at a prescribed set of points.
struct LinearSystem {
  unsigned degree = 0;
  std::vector<ProjPoint> points;
  QVectorBasis kernel;

  /// Corank of the evaluation matrix minus one; -1 for the empty system.
  int projective_dimension() const noexcept {
    return static_cast<int>(kernel.size()) - 1;
  }
};

/// The |points| x (n+1)(n+2)/2 evaluation matrix.
QMatrix evaluation_matrix(unsigned n, std::span<const ProjPoint> points);

/// Throws InputError for n = 0 or repeated points.
LinearSystem through_points(unsigned n, std::span<const ProjPoint> points);

struct DivisibilityDimension {
  std::string component;
  std::size_t dimension = 0;  // dim of K ∩ component * (forms of degree n - deg)
};

struct SplitAnalysis {
  std::string branch_name;
  std::string curve_name;
  SplitHypothesisReport hypotheses;
  LinearSystem system;
  std::vector<DivisibilityDimension> divisible;
  int connected_number = 0;
  /// A member of the system avoiding every component of C; set when c = 2.
  std::optional<HomPoly> witness;
};

/// Full analysis of one split. When the hypotheses fail, only `hypotheses`
/// is filled in and connected_number stays 0.
SplitAnalysis analyze_split(const Arrangement& a, const SubCurve& b, const SubCurve& c);
SplitAnalysis analyze_split(const Arrangement& a, const std::string& branch_name,
                            const std::string& curve_name);

/// 1 or 2. Throws HypothesisError when the hypotheses fail.
int connected_number(const Arrangement& a, const SubCurve& b, const SubCurve& c);

enum class Conclusion { CandidatePair, Inconclusive };

struct Split {
  std::string branch;
  std::string curve;
};

struct ZariskiCertificate {
  bool equivalences_found = false;
  std::size_t equivalence_count = 0;
  /// Every equivalence carries C-part onto C-part (hence B onto B).
  bool split_rigid = false;
  std::array<int, 2> c_values{0, 0};
  std::array<int, 2> projective_dimensions{0, 0};
  Conclusion conclusion = Conclusion::Inconclusive;
  std::vector<std::string> reasons;
  std::vector<std::string> axioms_used;
  std::array<SplitAnalysis, 2> splits;
};

inline constexpr const char* kInvarianceAxiom =
    "invariance: if a homeomorphism of P^2 maps B1 to B2 compatibly with the "
    "double covers, it preserves the connected number of the complementary curve";
inline constexpr const char* kHomeomorphismAxiom =
    "combinatorial type: a homeomorphism of P^2 carrying A1 onto A2 induces a "
    "combinatorial equivalence of A1 and A2";

/// Propagates HypothesisError from either split.
ZariskiCertificate zariski_certificate(const Arrangement& a1, const Arrangement& a2,
                                       const Split& split1, const Split& split2);

}  // namespace zpair

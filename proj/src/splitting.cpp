#include "zpair/splitting.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "zpair/error.hpp"

namespace zpair {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string describe(const SingularPoint& p) {
  if (p.is_rational()) return p.point().to_string();
  const auto& loc = std::get<ConjugateLocation>(p.location);
  return "conjugate point of " + loc.line + " and " + loc.conic;
}

void require_partition(const Arrangement& a, const SubCurve& b, const SubCurve& c) {
  std::set<std::string> seen;
  for (const auto& m : b.members) {
    a.component(m.label);
    seen.insert(m.label);
  }
  for (const auto& m : c.members) {
    a.component(m.label);
    if (!seen.insert(m.label).second) {
      throw InputError("curves " + b.name + " and " + c.name + " share component " + m.label);
    }
  }
  if (seen.size() != a.size()) {
    throw InputError("curves " + b.name + " and " + c.name +
                     " do not cover every component of the arrangement");
  }
}

}  // namespace

SplitHypothesisReport check_hypotheses(const Arrangement& a, const SubCurve& b,
                                       const SubCurve& c) {
  require_partition(a, b, c);
  SplitHypothesisReport report;
  report.b_even_degree = b.degree() % 2 == 0;
  if (!report.b_even_degree) {
    report.violations.push_back("B = " + b.name + " has odd degree " + std::to_string(b.degree()));
  }

  report.c_nodal_smooth = true;
  const std::vector<std::string> c_labels = c.labels();
  for (const auto& p : singular_points(a.restricted(c_labels))) {
    if (p.type.kind != LocalKind::Node) {
      report.c_nodal_smooth = false;
      report.violations.push_back("C = " + c.name + " has a " + p.type.name() + " at " +
                                  describe(p));
    }
  }

  report.bc_disjoint_from_nodes_of_c = true;
  report.all_local_mults_two = true;
  report.rational_support = true;
  for (const auto& p : singular_points(a)) {
    std::vector<std::string> on_b, on_c;
    for (const auto& br : p.branches) (b.contains(br) ? on_b : on_c).push_back(br);
    if (on_b.empty() || on_c.empty()) continue;

    if (!p.is_rational()) {
      report.rational_support = false;
      report.violations.push_back("B and C meet at an irrational " + describe(p));
      continue;
    }
    if (p.type.kind == LocalKind::Other) {
      report.violations.push_back("unsupported local type " + p.type.name() + " at " +
                                  describe(p));
    }
    if (on_c.size() >= 2) {
      report.bc_disjoint_from_nodes_of_c = false;
      report.violations.push_back("B passes through the node of C at " + describe(p) + " {" +
                                  join(on_c, ",") + "}");
    }
    unsigned local = 0;
    for (const auto& lb : on_b) {
      for (const auto& lc : on_c) local += p.multiplicity(lb, lc);
    }
    if (local != 2) {
      report.all_local_mults_two = false;
      report.violations.push_back("local intersection multiplicity of B and C at " +
                                  describe(p) + " is " + std::to_string(local));
    }
    report.intersection_points.push_back(p.point());
  }
  return report;
}

QMatrix evaluation_matrix(unsigned n, std::span<const ProjPoint> points) {
  std::vector<QVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(monomial_row(n, p));
  return QMatrix::from_rows(rows, monomial_count(n));
}

LinearSystem through_points(unsigned n, std::span<const ProjPoint> points) {
  if (n == 0) throw InputError("linear systems need degree at least 1");
  std::set<ProjPoint> distinct(points.begin(), points.end());
  if (distinct.size() != points.size()) throw InputError("repeated point in linear system");
  LinearSystem sys;
  sys.degree = n;
  sys.points.assign(points.begin(), points.end());
  sys.kernel = kernel_basis(evaluation_matrix(n, points));
  return sys;
}

SplitAnalysis analyze_split(const Arrangement& a, const SubCurve& b, const SubCurve& c) {
  SplitAnalysis out;
  out.branch_name = b.name;
  out.curve_name = c.name;
  out.hypotheses = check_hypotheses(a, b, c);
  if (!out.hypotheses.satisfied()) return out;

  const unsigned n = b.degree() / 2;
  out.system = through_points(n, out.hypotheses.intersection_points);
  const QVectorBasis& k = out.system.kernel;

  std::vector<QVectorBasis> multiples;
  for (const auto& f : c.members) {
    if (f.degree() > n) continue;
    QVectorBasis kf = intersect_subspaces(k, multiplication_image(f.form, n));
    out.divisible.push_back({f.label, kf.size()});
    multiples.push_back(std::move(kf));
  }

  // A finite union of proper subspaces never covers K over an infinite field.
  const bool avoids_all =
      !k.empty() && std::all_of(multiples.begin(), multiples.end(),
                                [&](const QVectorBasis& kf) { return kf.size() < k.size(); });
  out.connected_number = avoids_all ? 2 : 1;

  if (avoids_all) {
    std::mt19937 rng(20240229u);
    for (int attempt = 0; attempt < 512 && !out.witness; ++attempt) {
      const int bound = 2 + attempt / 16;
      std::uniform_int_distribution<int> coeff(-bound, bound);
      QVector v(k.ambient_dim);
      for (const auto& basis_vec : k.vectors) {
        const Rational t = coeff(rng);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += t * basis_vec[i];
      }
      if (is_zero(v)) continue;
      const bool clear = std::none_of(multiples.begin(), multiples.end(),
                                      [&](const QVectorBasis& kf) { return in_span(v, kf); });
      if (clear) out.witness = HomPoly(n, primitive(v));
    }
  }
  return out;
}

SplitAnalysis analyze_split(const Arrangement& a, const std::string& branch_name,
                            const std::string& curve_name) {
  return analyze_split(a, a.subcurve(branch_name), a.subcurve(curve_name));
}

int connected_number(const Arrangement& a, const SubCurve& b, const SubCurve& c) {
  const SplitAnalysis s = analyze_split(a, b, c);
  if (!s.hypotheses.satisfied()) {
    throw HypothesisError("split (" + b.name + ", " + c.name +
                          ") violates the hypotheses: " + join(s.hypotheses.violations, "; "));
  }
  return s.connected_number;
}

ZariskiCertificate zariski_certificate(const Arrangement& a1, const Arrangement& a2,
                                       const Split& split1, const Split& split2) {
  ZariskiCertificate cert;
  cert.axioms_used = {kHomeomorphismAxiom, kInvarianceAxiom};

  const std::array<const Arrangement*, 2> arrs{&a1, &a2};
  const std::array<const Split*, 2> splits{&split1, &split2};
  for (std::size_t i = 0; i < 2; ++i) {
    cert.splits[i] = analyze_split(*arrs[i], splits[i]->branch, splits[i]->curve);
    const auto& s = cert.splits[i];
    if (!s.hypotheses.satisfied()) {
      throw HypothesisError("arrangement " + std::to_string(i + 1) + ", split (" +
                            splits[i]->branch + ", " + splits[i]->curve +
                            "): " + join(s.hypotheses.violations, "; "));
    }
    cert.c_values[i] = s.connected_number;
    cert.projective_dimensions[i] = s.system.projective_dimension();
  }

  const auto eqs = equivalences(combinatorics(a1), combinatorics(a2));
  cert.equivalence_count = eqs.size();
  cert.equivalences_found = !eqs.empty();

  const SubCurve c1 = a1.subcurve(split1.curve);
  const SubCurve c2 = a2.subcurve(split2.curve);
  cert.split_rigid = cert.equivalences_found;
  for (const auto& bij : eqs) {
    for (const auto& [from, to] : bij) {
      if (c1.contains(from) != c2.contains(to)) {
        cert.split_rigid = false;
        break;
      }
    }
    if (!cert.split_rigid) break;
  }

  if (!cert.equivalences_found) cert.reasons.push_back("the arrangements are not combinatorially equivalent");
  if (cert.equivalences_found && !cert.split_rigid) {
    cert.reasons.push_back("some combinatorial equivalence does not carry " + split1.curve +
                           " onto " + split2.curve);
  }
  if (cert.c_values[0] == cert.c_values[1]) cert.reasons.push_back("the connected numbers agree");
  cert.conclusion = cert.reasons.empty() ? Conclusion::CandidatePair : Conclusion::Inconclusive;
  return cert;
}

}  // namespace zpair

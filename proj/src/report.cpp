#include "zpair/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zpair {

namespace {

const char* yes_no(bool v) { return v ? "true" : "false"; }

// Table order: higher ordinary multiple points first, then tacnodes, nodes,
// and unclassified configurations last.
int group_rank(const LocalType& t) {
  switch (t.kind) {
    case LocalKind::OrdinaryMultiple:
      return 100 - static_cast<int>(t.branches);
    case LocalKind::Tacnode:
      return 200;
    case LocalKind::Node:
      return 300;
    case LocalKind::Other:
      return 400;
  }
  return 500;
}

std::string plural(const LocalType& t, std::size_t count) {
  std::string name = t.name();
  if (count == 1) return name;
  if (t.kind == LocalKind::Other) return name + " points";
  return name + "s";
}

std::vector<std::pair<LocalType, std::vector<const SingularPoint*>>> grouped(
    const std::vector<SingularPoint>& points) {
  std::vector<std::pair<LocalType, std::vector<const SingularPoint*>>> groups;
  for (const auto& p : points) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == p.type; });
    if (it == groups.end()) {
      groups.push_back({p.type, {}});
      it = groups.end() - 1;
    }
    it->second.push_back(&p);
  }
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    const int ra = group_rank(a.first);
    const int rb = group_rank(b.first);
    return ra != rb ? ra < rb : a.first < b.first;
  });
  return groups;
}

std::string location_text(const SingularPoint& p) {
  if (p.is_rational()) return p.point().to_string();
  const auto& loc = std::get<ConjugateLocation>(p.location);
  return "conjugate " + std::to_string(loc.index + 1) + "/2, discriminant " +
         loc.discriminant.get_str();
}

std::string bijection_text(const LabelBijection& bij) {
  std::string out;
  for (std::size_t i = 0; i < bij.size(); ++i) {
    if (i) out += ", ";
    out += bij[i].first + "->" + bij[i].second;
  }
  return out;
}

std::string list_text(const std::vector<std::string>& items) {
  if (items.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += " ";
    out += items[i];
  }
  return out;
}

std::string n_values_text(const std::vector<unsigned>& ns) {
  std::string out;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(ns[i]);
  }
  return ns.empty() ? "(none)" : out;
}

void write_deletion(std::ostringstream& os, const DeletionResult& d, const std::string& indent) {
  os << indent << "delete " << d.deleted << " (matched " << d.matched << "): ";
  if (!d.certificate) {
    os << "Unknown\n";
    for (const auto& child : d.children) write_deletion(os, child, indent + "  ");
    return;
  }
  const auto& cert = *d.certificate;
  os << "Certified by " << to_string(cert.base_rule) << "\n";
  os << indent << "  base: " << list_text(cert.base) << "\n";
  if (cert.base_rule == BaseRule::ConicWithTangents) {
    os << indent << "  order: " << list_text(cert.order) << "\n";
    os << indent << "  n_t: " << n_values_text(cert.n_values) << "\n";
  }
}

}  // namespace

std::string brace_set(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

std::string singular_summary(const std::vector<SingularPoint>& points) {
  if (points.empty()) return "no singular points";
  std::string out;
  for (const auto& [type, members] : grouped(points)) {
    if (!out.empty()) out += ", ";
    out += std::to_string(members.size()) + " " + plural(type, members.size());
  }
  return out;
}

std::string format_analysis(const Arrangement& a) {
  std::ostringstream os;
  const auto points = singular_points(a);
  os << "components: " << a.size() << " (" << a.line_count() << " lines, "
     << (a.conic() ? 1 : 0) << " conic)\n";
  for (const auto& c : a.components()) {
    os << "  " << c.label << " " << (c.is_line() ? "line" : "conic") << " : "
       << c.form.to_string() << " = 0\n";
  }
  for (const auto& [name, members] : a.subcurves()) {
    os << "curve " << name << " = " << brace_set(members) << "\n";
  }
  os << "singular points: " << singular_summary(points) << "\n";
  for (const auto& [type, members] : grouped(points)) {
    os << plural(type, 2) << ":\n";
    for (const auto* p : members) {
      os << "  " << brace_set(p->branches) << " " << location_text(*p) << "\n";
    }
  }
  const auto checks = bezout_checks(a, points);
  const auto bad = std::count_if(checks.begin(), checks.end(),
                                 [](const BezoutCheck& b) { return !b.ok(); });
  os << "bezout: " << checks.size() << " pairs checked, " << bad << " inconsistent\n";
  for (const auto& b : checks) {
    if (b.ok()) continue;
    os << "  " << b.first << "," << b.second << ": expected " << b.expected << ", found "
       << b.found << "\n";
  }
  return os.str();
}

std::string format_comparison(const Arrangement& a1, const Arrangement& a2) {
  const Combinatorics c1 = combinatorics(a1);
  const Combinatorics c2 = combinatorics(a2);
  const auto eqs = equivalences(c1, c2);
  std::ostringstream os;
  os << "equivalent: " << yes_no(!eqs.empty()) << "\n";
  os << "equivalences: " << eqs.size() << "\n";
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    os << "  " << (i + 1) << ": " << bijection_text(eqs[i]) << "\n";
  }
  os << "fingerprints (first):\n";
  for (const auto& l : c1.labels) {
    os << "  " << l << " " << component_fingerprint(c1, l).to_string() << "\n";
  }
  os << "fingerprints (second):\n";
  for (const auto& l : c2.labels) {
    os << "  " << l << " " << component_fingerprint(c2, l).to_string() << "\n";
  }
  return os.str();
}

std::string format_split(const SplitAnalysis& s) {
  std::ostringstream os;
  const auto& h = s.hypotheses;
  os << "split: B = " << s.branch_name << ", C = " << s.curve_name << "\n";
  os << "hypotheses:\n";
  os << "  b_even_degree: " << yes_no(h.b_even_degree) << "\n";
  os << "  c_nodal_smooth: " << yes_no(h.c_nodal_smooth) << "\n";
  os << "  bc_disjoint_from_nodes_of_c: " << yes_no(h.bc_disjoint_from_nodes_of_c) << "\n";
  os << "  all_local_mults_two: " << yes_no(h.all_local_mults_two) << "\n";
  os << "  rational_support: " << yes_no(h.rational_support) << "\n";
  os << "  satisfied: " << yes_no(h.satisfied()) << "\n";
  os << "violations:" << (h.violations.empty() ? " none" : "") << "\n";
  for (const auto& v : h.violations) os << "  " << v << "\n";
  os << "intersection points: " << h.intersection_points.size() << "\n";
  for (const auto& p : h.intersection_points) os << "  " << p.to_string() << "\n";
  if (!h.satisfied()) return os.str();

  const auto& sys = s.system;
  os << "linear system: degree " << sys.degree << ", " << sys.points.size() << " points, "
     << "corank " << sys.kernel.size() << ", projective dimension "
     << sys.projective_dimension() << "\n";
  os << "kernel basis:\n";
  for (const auto& v : sys.kernel.vectors) {
    os << "  " << HomPoly(sys.degree, v).to_string() << "\n";
  }
  os << "divisible subspaces:\n";
  for (const auto& d : s.divisible) os << "  " << d.component << ": " << d.dimension << "\n";
  os << "connected number: " << s.connected_number << "\n";
  if (s.witness) os << "witness: " << s.witness->to_string() << "\n";
  return os.str();
}

std::string format_certificate(const ZariskiCertificate& cert) {
  std::ostringstream os;
  os << "conclusion: "
     << (cert.conclusion == Conclusion::CandidatePair ? "CandidatePair" : "Inconclusive") << "\n";
  os << "equivalences_found: " << yes_no(cert.equivalences_found) << "\n";
  os << "equivalence_count: " << cert.equivalence_count << "\n";
  os << "split_rigid: " << yes_no(cert.split_rigid) << "\n";
  os << "projective_dimensions: " << cert.projective_dimensions[0] << " "
     << cert.projective_dimensions[1] << "\n";
  os << "c_values: " << cert.c_values[0] << " " << cert.c_values[1] << "\n";
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& s = cert.splits[i];
    os << "split_" << (i + 1) << ": B = " << s.branch_name << ", C = " << s.curve_name
       << ", points " << s.hypotheses.intersection_points.size() << "\n";
    if (s.witness) os << "witness_" << (i + 1) << ": " << s.witness->to_string() << "\n";
  }
  os << "reasons:" << (cert.reasons.empty() ? " none" : "") << "\n";
  for (const auto& r : cert.reasons) os << "  " << r << "\n";
  os << "axioms_used:\n";
  for (const auto& a : cert.axioms_used) os << "  " << a << "\n";
  return os.str();
}

std::string format_minimality(const MinimalityReport& report) {
  std::ostringstream os;
  os << "overall: " << (report.minimal ? "Minimal" : "Unknown") << "\n";
  os << "equivalence: " << bijection_text(report.equivalence) << "\n";
  os << "convention: tangent lines form the base with the conic; n_t counted from the "
        "first transversal line\n";
  os << "deletions:\n";
  for (const auto& d : report.deletions) write_deletion(os, d, "  ");
  os << "axioms_used:\n";
  for (const auto& a : report.axioms_used) os << "  " << a << "\n";
  return os.str();
}

}  // namespace zpair

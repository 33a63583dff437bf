#include "zpair/moduli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "zpair/error.hpp"

namespace zpair {

namespace {

std::optional<std::size_t> conic_index(const Combinatorics& c) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.degrees[i] != 2) continue;
    if (found) throw InputError("connectivity certificates support at most one conic");
    found = i;
  }
  return found;
}

// Lines with a multiplicity-2 contact with the conic.
std::vector<std::size_t> tangent_lines(const Combinatorics& c, std::size_t conic) {
  std::set<std::size_t> out;
  for (const auto& p : c.points) {
    for (const auto& [i, j, m] : p.multiplicities) {
      if (m < 2) continue;
      if (i == conic) out.insert(j);
      if (j == conic) out.insert(i);
    }
  }
  return {out.begin(), out.end()};
}

unsigned n_value_indexed(const Combinatorics& c, std::size_t line,
                         const std::vector<bool>& prior) {
  unsigned count = 0;
  for (const auto& p : c.points) {
    unsigned local = 0;
    for (const auto& [i, j, m] : p.multiplicities) {
      if (i == line && prior[j]) local += m;
      if (j == line && prior[i]) local += m;
    }
    if (local >= 2) ++count;
  }
  return count;
}

void add_unique(std::vector<std::string>& list, const std::string& item) {
  if (std::find(list.begin(), list.end(), item) == list.end()) list.push_back(item);
}

}  // namespace

std::string to_string(BaseRule rule) {
  return rule == BaseRule::ConicWithTangents ? "ConicWithTangents" : "PureLinesAtMost9";
}

unsigned n_value(const Combinatorics& c, std::string_view line,
                 const std::set<std::string>& prior) {
  const std::size_t idx = c.index_of(line);
  std::vector<bool> mask(c.size(), false);
  for (const auto& l : prior) mask[c.index_of(l)] = true;
  if (mask[idx]) throw InputError("line " + std::string(line) + " is part of the prior curve");
  return n_value_indexed(c, idx, mask);
}

std::optional<OrderingCertificate> connectivity_certificate(const Combinatorics& c) {
  const auto conic = conic_index(c);
  OrderingCertificate cert;
  if (!conic) {
    if (c.size() > 9) return std::nullopt;
    cert.base = c.labels;
    cert.base_rule = BaseRule::PureLinesAtMost9;
    return cert;
  }

  const std::vector<std::size_t> tangents = tangent_lines(c, *conic);
  if (tangents.size() > 2) return std::nullopt;

  std::vector<bool> placed(c.size(), false);
  placed[*conic] = true;
  cert.base.push_back(c.labels[*conic]);
  for (auto t : tangents) {
    placed[t] = true;
    cert.base.push_back(c.labels[t]);
  }
  cert.base_rule = BaseRule::ConicWithTangents;

  std::vector<std::size_t> remaining;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!placed[i]) remaining.push_back(i);
  }

  // Depth-first over orders; placed sets already known to be dead ends are
  // remembered so the search is exhaustive in O(2^k) states.
  std::set<std::vector<bool>> dead;
  std::vector<std::size_t> order;
  std::vector<unsigned> ns;
  std::function<bool()> search = [&]() {
    if (order.size() == remaining.size()) return true;
    if (dead.count(placed)) return false;
    for (auto line : remaining) {
      if (placed[line]) continue;
      const unsigned n = n_value_indexed(c, line, placed);
      if (n > 2) continue;
      placed[line] = true;
      order.push_back(line);
      ns.push_back(n);
      if (search()) return true;
      placed[line] = false;
      order.pop_back();
      ns.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  if (!search()) return std::nullopt;

  for (auto i : order) cert.order.push_back(c.labels[i]);
  cert.n_values = ns;
  return cert;
}

bool revalidate(const Combinatorics& c, const OrderingCertificate& cert) {
  if (cert.order.size() != cert.n_values.size()) return false;
  if (cert.base.size() + cert.order.size() != c.size()) return false;
  const auto conic = conic_index(c);

  if (cert.base_rule == BaseRule::PureLinesAtMost9) {
    return !conic && c.size() <= 9 && cert.order.empty();
  }
  if (!conic) return false;
  const auto tangents = tangent_lines(c, *conic);
  if (tangents.size() > 2) return false;

  std::set<std::string> base(cert.base.begin(), cert.base.end());
  if (!base.count(c.labels[*conic]) || base.size() != 1 + tangents.size()) return false;
  for (auto t : tangents) {
    if (!base.count(c.labels[t])) return false;
  }

  std::set<std::string> prior = base;
  for (std::size_t k = 0; k < cert.order.size(); ++k) {
    if (prior.count(cert.order[k])) return false;
    const unsigned n = n_value(c, cert.order[k], prior);
    if (n != cert.n_values[k] || n > 2) return false;
    prior.insert(cert.order[k]);
  }
  return true;
}

MinimalityReport minimality_check(const Arrangement& a1, const Arrangement& a2) {
  const auto eqs = equivalences(combinatorics(a1), combinatorics(a2));
  if (eqs.empty()) {
    throw HypothesisError("minimality needs combinatorially equivalent arrangements");
  }
  MinimalityReport report;
  report.equivalence = eqs.front();
  std::map<std::string, std::string> match(report.equivalence.begin(), report.equivalence.end());

  bool used_lines_axiom = false;
  bool used_ordering = false;

  // Both sides must certify; the combinatorics agree, so they normally do.
  std::map<std::set<std::string>, std::optional<OrderingCertificate>> memo;
  auto certify = [&](const std::set<std::string>& keep) {
    const auto it = memo.find(keep);
    if (it != memo.end()) return it->second;
    std::vector<std::string> k1(keep.begin(), keep.end());
    std::vector<std::string> k2;
    for (const auto& l : k1) k2.push_back(match.at(l));
    auto cert1 = connectivity_certificate(combinatorics(a1.restricted(k1)));
    auto cert2 = connectivity_certificate(combinatorics(a2.restricted(k2)));
    std::optional<OrderingCertificate> out;
    if (cert1 && cert2) out = cert1;
    memo.emplace(keep, out);
    return out;
  };

  // Uncertified deletions are expanded one more level for diagnostics.
  std::function<DeletionResult(const std::set<std::string>&, const std::string&, int)> examine =
      [&](const std::set<std::string>& parent, const std::string& label, int depth) {
        DeletionResult r;
        r.deleted = label;
        r.matched = match.at(label);
        std::set<std::string> keep = parent;
        keep.erase(label);
        r.certificate = certify(keep);
        if (r.certificate) {
          if (r.certificate->base_rule == BaseRule::PureLinesAtMost9) used_lines_axiom = true;
          else used_ordering = true;
        } else if (depth == 0 && keep.size() > 1) {
          for (const auto& next : keep) r.children.push_back(examine(keep, next, depth + 1));
        }
        return r;
      };

  std::set<std::string> all;
  for (const auto& comp : a1.components()) all.insert(comp.label);
  report.minimal = true;
  for (const auto& comp : a1.components()) {
    report.deletions.push_back(examine(all, comp.label, 0));
    if (!report.deletions.back().certified()) report.minimal = false;
  }

  if (used_lines_axiom) add_unique(report.axioms_used, kLineClassificationAxiom);
  if (used_ordering) {
    add_unique(report.axioms_used, kOrderingAxiom);
    add_unique(report.axioms_used, kConicBaseAxiom);
  }
  add_unique(report.axioms_used, kRestrictionArgument);
  return report;
}

}  // namespace zpair

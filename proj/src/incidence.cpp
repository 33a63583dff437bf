#include "zpair/incidence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "zpair/error.hpp"

namespace zpair {

namespace {

Rational evaluate_at(const HomPoly& f, const QVector& p) {
  Rational acc = 0;
  const auto mons = monomials(f.degree());
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (f.coefficients()[i] == 0) continue;
    Rational term = f.coefficients()[i];
    for (unsigned e = 0; e < mons[i].x; ++e) term *= p[0];
    for (unsigned e = 0; e < mons[i].y; ++e) term *= p[1];
    for (unsigned e = 0; e < mons[i].z; ++e) term *= p[2];
    acc += term;
  }
  return acc;
}

// Exact square root of a nonnegative rational, if it is a square.
bool rational_sqrt(const Rational& v, Rational& root) {
  if (v < 0) return false;
  if (mpz_perfect_square_p(v.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(v.get_den_mpz_t()) == 0) {
    return false;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

QVector combine(const Rational& s, const QVector& p, const Rational& t, const QVector& q) {
  return {s * p[0] + t * q[0], s * p[1] + t * q[1], s * p[2] + t * q[2]};
}

ProjPoint to_point(const QVector& v) { return ProjPoint(v[0], v[1], v[2]); }

}  // namespace

ProjPoint intersect_lines(const Component& l1, const Component& l2) {
  if (!l1.is_line() || !l2.is_line()) throw InputError("intersect_lines needs two lines");
  const auto& a = l1.form.coefficients();
  const auto& b = l2.form.coefficients();
  const QVector cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                      a[0] * b[1] - a[1] * b[0]};
  if (is_zero(cross)) {
    throw InputError("lines " + l1.label + " and " + l2.label + " are proportional");
  }
  return to_point(cross);
}

LineConicOutcome intersect_line_conic(const Component& l, const Component& q) {
  if (!l.is_line() || !q.is_conic()) {
    throw InputError("intersect_line_conic needs a line and a conic");
  }
  // Two points spanning the line, then q(sP + tQ) = alpha s^2 + beta st + gamma t^2.
  const QVectorBasis span = kernel_basis(QMatrix::from_rows(
      std::vector<QVector>{l.form.coefficients()}, 3));
  const QVector& p = span.vectors[0];
  const QVector& r = span.vectors[1];
  const Rational alpha = evaluate_at(q.form, p);
  const Rational gamma = evaluate_at(q.form, r);
  const Rational beta = evaluate_at(q.form, combine(1, p, 1, r)) - alpha - gamma;
  const Rational disc = beta * beta - 4 * alpha * gamma;

  if (alpha == 0 && beta == 0 && gamma == 0) {
    throw InputError("line " + l.label + " is contained in conic " + q.label);
  }
  if (alpha == 0) {
    // t = 0 is a root; the other is beta s + gamma t = 0.
    if (beta == 0) return Tangent{to_point(p)};
    return TwoRational{to_point(p), to_point(combine(-gamma, p, beta, r))};
  }
  if (disc == 0) return Tangent{to_point(combine(-beta, p, 2 * alpha, r))};
  Rational root;
  if (!rational_sqrt(disc, root)) return ConjugatePair{disc, l.label, q.label};
  return TwoRational{to_point(combine(-beta + root, p, 2 * alpha, r)),
                     to_point(combine(-beta - root, p, 2 * alpha, r))};
}

bool tangency(const Component& l, const Component& q) {
  return std::holds_alternative<Tangent>(intersect_line_conic(l, q));
}

std::string LocalType::name() const {
  switch (kind) {
    case LocalKind::Node:
      return "node";
    case LocalKind::Tacnode:
      return "tacnode";
    case LocalKind::OrdinaryMultiple:
      return branches == 3 ? "ordinary triple point"
                           : "ordinary " + std::to_string(branches) + "-fold point";
    case LocalKind::Other: {
      std::string s = "other(";
      for (std::size_t i = 0; i < signature.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(signature[i]);
      }
      return s + ")";
    }
  }
  return "unknown";
}

LocalType classify(unsigned branches, std::vector<unsigned> pairwise) {
  std::sort(pairwise.begin(), pairwise.end());
  LocalType t;
  t.branches = branches;
  const bool all_transverse =
      std::all_of(pairwise.begin(), pairwise.end(), [](unsigned m) { return m == 1; });
  if (branches == 2 && pairwise.size() == 1 && pairwise[0] == 1) {
    t.kind = LocalKind::Node;
  } else if (branches == 2 && pairwise.size() == 1 && pairwise[0] == 2) {
    t.kind = LocalKind::Tacnode;
  } else if (branches >= 3 && all_transverse &&
             pairwise.size() == static_cast<std::size_t>(branches) * (branches - 1) / 2) {
    t.kind = LocalKind::OrdinaryMultiple;
  } else {
    t.kind = LocalKind::Other;
    t.signature = std::move(pairwise);
  }
  return t;
}

bool SingularPoint::has_branch(std::string_view label) const noexcept {
  return std::find(branches.begin(), branches.end(), label) != branches.end();
}

unsigned SingularPoint::multiplicity(std::string_view a, std::string_view b) const {
  for (const auto& [key, m] : pairwise_mult) {
    if ((key.first == a && key.second == b) || (key.first == b && key.second == a)) return m;
  }
  return 0;
}

std::vector<SingularPoint> singular_points(const Arrangement& a) {
  struct Accumulator {
    std::map<std::pair<std::size_t, std::size_t>, unsigned> mult;
  };
  const auto& comps = a.components();
  std::map<ProjPoint, Accumulator> rational;
  std::vector<SingularPoint> conjugate;

  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const Component& ci = comps[i];
      const Component& cj = comps[j];
      if (ci.is_line() && cj.is_line()) {
        rational[intersect_lines(ci, cj)].mult[{i, j}] = 1;
        continue;
      }
      const Component& line = ci.is_line() ? ci : cj;
      const Component& conic = ci.is_line() ? cj : ci;
      const auto outcome = intersect_line_conic(line, conic);
      if (const auto* two = std::get_if<TwoRational>(&outcome)) {
        rational[two->first].mult[{i, j}] = 1;
        rational[two->second].mult[{i, j}] = 1;
      } else if (const auto* tan = std::get_if<Tangent>(&outcome)) {
        rational[tan->point].mult[{i, j}] = 2;
      } else {
        const auto& pair = std::get<ConjugatePair>(outcome);
        for (unsigned k = 0; k < 2; ++k) {
          SingularPoint sp{ConjugateLocation{pair.discriminant, pair.line, pair.conic, k},
                           {}, {}, {}};
          sp.branches = {ci.label, cj.label};
          sp.pairwise_mult[{ci.label, cj.label}] = 1;
          sp.type = classify(2, {1});
          conjugate.push_back(std::move(sp));
        }
      }
    }
  }

  std::vector<SingularPoint> out;
  out.reserve(rational.size() + conjugate.size());
  for (const auto& [point, acc] : rational) {
    std::set<std::size_t> members;
    std::vector<unsigned> mults;
    SingularPoint sp{point, {}, {}, {}};
    for (const auto& [key, m] : acc.mult) {
      members.insert(key.first);
      members.insert(key.second);
      mults.push_back(m);
      sp.pairwise_mult[{comps[key.first].label, comps[key.second].label}] = m;
    }
    for (auto idx : members) sp.branches.push_back(comps[idx].label);
    sp.type = classify(static_cast<unsigned>(members.size()), std::move(mults));
    out.push_back(std::move(sp));
  }
  for (auto& sp : conjugate) out.push_back(std::move(sp));
  return out;
}

std::vector<BezoutCheck> bezout_checks(const Arrangement& a,
                                       const std::vector<SingularPoint>& points) {
  std::vector<BezoutCheck> out;
  const auto& comps = a.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      BezoutCheck check{comps[i].label, comps[j].label, comps[i].degree() * comps[j].degree(), 0};
      for (const auto& p : points) check.found += p.multiplicity(comps[i].label, comps[j].label);
      out.push_back(std::move(check));
    }
  }
  return out;
}

std::size_t Combinatorics::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw InputError("unknown component label " + std::string(label));
}

Combinatorics combinatorics(const Arrangement& a) {
  Combinatorics c;
  for (const auto& comp : a.components()) {
    c.labels.push_back(comp.label);
    c.degrees.push_back(comp.degree());
  }
  for (const auto& sp : singular_points(a)) {
    CombinatorialPoint cp;
    cp.type = sp.type;
    for (const auto& b : sp.branches) cp.components.push_back(c.index_of(b));
    std::sort(cp.components.begin(), cp.components.end());
    for (const auto& [key, m] : sp.pairwise_mult) {
      auto i = c.index_of(key.first);
      auto j = c.index_of(key.second);
      if (i > j) std::swap(i, j);
      cp.multiplicities.emplace_back(i, j, m);
    }
    std::sort(cp.multiplicities.begin(), cp.multiplicities.end());
    c.points.push_back(std::move(cp));
  }
  return c;
}

std::size_t Fingerprint::count(LocalKind kind, unsigned branches) const {
  return static_cast<std::size_t>(std::count_if(
      incidences.begin(), incidences.end(), [&](const auto& inc) {
        return inc.first.kind == kind && (branches == 0 || inc.first.branches == branches);
      }));
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "degree " << degree << ":";
  std::size_t i = 0;
  bool first = true;
  while (i < incidences.size()) {
    std::size_t j = i;
    while (j < incidences.size() && incidences[j] == incidences[i]) ++j;
    os << (first ? " " : ", ") << (j - i) << " x " << incidences[i].first.name() << "[";
    for (std::size_t k = 0; k < incidences[i].second.size(); ++k) {
      if (k) os << ",";
      os << incidences[i].second[k];
    }
    os << "]";
    first = false;
    i = j;
  }
  if (first) os << " none";
  return os.str();
}

Fingerprint component_fingerprint(const Combinatorics& c, std::string_view label) {
  const std::size_t idx = c.index_of(label);
  Fingerprint fp;
  fp.degree = c.degrees[idx];
  for (const auto& p : c.points) {
    if (!std::binary_search(p.components.begin(), p.components.end(), idx)) continue;
    std::vector<unsigned> others;
    for (auto k : p.components) {
      if (k != idx) others.push_back(c.degrees[k]);
    }
    std::sort(others.begin(), others.end());
    fp.incidences.emplace_back(p.type, std::move(others));
  }
  std::sort(fp.incidences.begin(), fp.incidences.end());
  return fp;
}

namespace {

using PointKey = std::pair<LocalType, std::vector<std::tuple<std::size_t, std::size_t, unsigned>>>;

PointKey point_key(const CombinatorialPoint& p, const std::vector<std::size_t>& map) {
  std::vector<std::tuple<std::size_t, std::size_t, unsigned>> mults;
  for (const auto& [i, j, m] : p.multiplicities) {
    std::size_t a = map[i];
    std::size_t b = map[j];
    if (a > b) std::swap(a, b);
    mults.emplace_back(a, b, m);
  }
  std::sort(mults.begin(), mults.end());
  return {p.type, std::move(mults)};
}

// For each ordered pair (i, j), the sorted list of (type, multiplicity of
// i with j) over points containing both.
using PairProfile = std::vector<std::vector<std::vector<std::pair<LocalType, unsigned>>>>;

PairProfile pair_profile(const Combinatorics& c) {
  PairProfile prof(c.size(), std::vector<std::vector<std::pair<LocalType, unsigned>>>(c.size()));
  for (const auto& p : c.points) {
    for (const auto& [i, j, m] : p.multiplicities) {
      prof[i][j].emplace_back(p.type, m);
      prof[j][i].emplace_back(p.type, m);
    }
  }
  for (auto& row : prof) {
    for (auto& cell : row) std::sort(cell.begin(), cell.end());
  }
  return prof;
}

}  // namespace

std::vector<LabelBijection> equivalences(const Combinatorics& c1, const Combinatorics& c2) {
  std::vector<LabelBijection> out;
  const std::size_t n = c1.size();
  if (n != c2.size() || c1.points.size() != c2.points.size()) return out;

  std::vector<Fingerprint> fp1, fp2;
  for (const auto& l : c1.labels) fp1.push_back(component_fingerprint(c1, l));
  for (const auto& l : c2.labels) fp2.push_back(component_fingerprint(c2, l));
  const PairProfile prof1 = pair_profile(c1);
  const PairProfile prof2 = pair_profile(c2);

  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  std::vector<PointKey> target;
  for (const auto& p : c2.points) target.push_back(point_key(p, identity));
  std::sort(target.begin(), target.end());

  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);

  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      std::vector<PointKey> image;
      for (const auto& p : c1.points) image.push_back(point_key(p, map));
      std::sort(image.begin(), image.end());
      if (image != target) return;
      LabelBijection bij;
      for (std::size_t k = 0; k < n; ++k) bij.emplace_back(c1.labels[k], c2.labels[map[k]]);
      out.push_back(std::move(bij));
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || c1.degrees[i] != c2.degrees[j] || fp1[i] != fp2[j]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < i && consistent; ++k) {
        consistent = prof1[i][k] == prof2[j][map[k]];
      }
      if (!consistent) continue;
      used[j] = true;
      map[i] = j;
      extend(i + 1);
      used[j] = false;
    }
  };
  extend(0);
  return out;
}

}  // namespace zpair

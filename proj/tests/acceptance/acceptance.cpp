// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
//
// Usage: acceptance --cli <path to zpair> --data <directory with pair files>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "zpair/arrangement.hpp"
#include "zpair/incidence.hpp"
#include "zpair/moduli.hpp"
#include "zpair/splitting.hpp"

using namespace zpair;

namespace {

std::string g_cli;
std::string g_data;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

struct Run {
  int exit_code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run cli(const std::vector<std::string>& args) {
  std::string cmd = quote(g_cli);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string file(const std::string& name) { return g_data + "/" + name; }

Arrangement load(const std::string& name) { return load_file(file(name)); }

using BranchSet = std::set<std::string>;

BranchSet set_of(std::initializer_list<const char*> labels) {
  return BranchSet(labels.begin(), labels.end());
}

// Sections of an analyze report: heading -> branch sets listed under it.
std::map<std::string, std::multiset<BranchSet>> report_sections(const std::string& text) {
  std::map<std::string, std::multiset<BranchSet>> out;
  std::istringstream in(text);
  std::string line, section;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == ':' && line[0] != ' ') {
      section = line.substr(0, line.size() - 1);
      continue;
    }
    if (section.empty() || line.rfind("  {", 0) != 0) {
      if (line.rfind("  ", 0) != 0) section.clear();
      continue;
    }
    const auto close = line.find('}');
    BranchSet s;
    std::string label;
    for (char c : line.substr(3, close - 3)) {
      if (c == ',') {
        s.insert(label);
        label.clear();
      } else {
        label += c;
      }
    }
    s.insert(label);
    out[section].insert(s);
  }
  return out;
}

std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key, 0) == 0) return line.substr(key.size());
  }
  return "";
}

// 1 -----------------------------------------------------------------------

Outcome singularity_tables() {
  Outcome o;
  const std::set<BranchSet> pair1{set_of({"L1", "L4", "L5"}), set_of({"L1", "L6", "L7"}),
                                  set_of({"L2", "L5", "L7"}), set_of({"L2", "L4", "L6"}),
                                  set_of({"L3", "L5", "L6"}), set_of({"L3", "L7", "C"}),
                                  set_of({"L3", "L4", "C"})};
  const std::set<BranchSet> pair2{set_of({"L1", "L2", "L4"}), set_of({"L1", "L3", "L6"}),
                                  set_of({"L1", "L5", "L7"}), set_of({"L4", "L7", "C"}),
                                  set_of({"L4", "L5", "C"}),  set_of({"L6", "L7", "C"}),
                                  set_of({"L5", "L6", "C"})};
  const std::set<BranchSet> tac1{set_of({"L1", "C"}), set_of({"L2", "C"})};
  const std::set<BranchSet> tac2{set_of({"L2", "C"}), set_of({"L3", "C"})};

  struct Expect {
    const char* file;
    const std::set<BranchSet>* triples;
    const std::set<BranchSet>* tacnodes;
  };
  const Expect cases[] = {{"pair1_B1.txt", &pair1, &tac1},
                          {"pair1_B2.txt", &pair1, &tac1},
                          {"pair2_B1.txt", &pair2, &tac2},
                          {"pair2_B2.txt", &pair2, &tac2}};
  for (const auto& c : cases) {
    const Run r = cli({"analyze", file(c.file)});
    o.require(r.exit_code == 0, std::string(c.file) + ": analyze exit " +
                                    std::to_string(r.exit_code));
    const auto sections = report_sections(r.out);
    const auto get = [&](const std::string& k) {
      const auto it = sections.find(k);
      return it == sections.end() ? std::multiset<BranchSet>{} : it->second;
    };
    const auto triples = get("ordinary triple points");
    const auto tacnodes = get("tacnodes");
    o.require(std::set<BranchSet>(triples.begin(), triples.end()) == *c.triples &&
                  triples.size() == 7,
              std::string(c.file) + ": triple points differ from the table");
    o.require(std::set<BranchSet>(tacnodes.begin(), tacnodes.end()) == *c.tacnodes &&
                  tacnodes.size() == 2,
              std::string(c.file) + ": tacnodes differ from the table");
    for (const auto& [name, sets] : sections) {
      const bool allowed = name == "ordinary triple points" || name == "tacnodes" || name == "nodes";
      o.require(allowed, std::string(c.file) + ": unexpected point type '" + name + "'");
    }
    for (const auto& s : get("nodes")) {
      o.require(s.size() == 2, std::string(c.file) + ": node with more than two branches");
    }

    // The same sets straight from the library.
    std::set<BranchSet> lib_triples, lib_tac;
    for (const auto& p : singular_points(load(c.file))) {
      const BranchSet s(p.branches.begin(), p.branches.end());
      if (p.type.kind == LocalKind::OrdinaryMultiple && p.type.branches == 3) lib_triples.insert(s);
      if (p.type.kind == LocalKind::Tacnode) lib_tac.insert(s);
    }
    o.require(lib_triples == *c.triples && lib_tac == *c.tacnodes,
              std::string(c.file) + ": library singular points differ from the table");
  }
  return o;
}

// 2 and 3 -----------------------------------------------------------------

struct SplitCase {
  const char* file;
  const char* branch;
  int dimension;
  int c;
};

const SplitCase kSplits[] = {{"pair1_B1.txt", "B1", 1, 2},
                             {"pair1_B2.txt", "B2", 0, 1},
                             {"pair2_B1.txt", "B1", 0, 1},
                             {"pair2_B2.txt", "B2", 1, 2}};

Outcome matrix_dimensions() {
  Outcome o;
  for (const auto& s : kSplits) {
    const Arrangement a = load(s.file);
    const auto h = check_hypotheses(a, a.subcurve(s.branch), a.subcurve("calC"));
    o.require(h.satisfied() && h.intersection_points.size() == 9,
              std::string(s.file) + ": expected nine admissible intersection points");
    const auto sys = through_points(3, h.intersection_points);
    o.require(sys.projective_dimension() == s.dimension,
              std::string(s.file) + ": projective dimension " +
                  std::to_string(sys.projective_dimension()) + ", expected " +
                  std::to_string(s.dimension));
    const std::size_t naive = [&] {
      std::vector<std::vector<Rational>> rows;
      for (const auto& p : h.intersection_points) rows.push_back(monomial_row(3, p));
      return oracle::naive_rank(rows);
    }();
    o.require(10 - naive - 1 == static_cast<std::size_t>(s.dimension),
              std::string(s.file) + ": naive rank disagrees with the expected dimension");

    const Run r = cli({"split", file(s.file), "--branch", s.branch, "--curve", "calC"});
    const std::string want = "degree 3, 9 points, corank " + std::to_string(s.dimension + 1) +
                             ", projective dimension " + std::to_string(s.dimension);
    o.require(r.exit_code == 0 && field(r.out, "linear system: ") == want,
              std::string(s.file) + ": split report does not state '" + want + "'");
  }
  return o;
}

Outcome connected_numbers() {
  Outcome o;
  for (const auto& s : kSplits) {
    const Arrangement a = load(s.file);
    const SplitAnalysis sa = analyze_split(a, s.branch, "calC");
    o.require(sa.connected_number == s.c, std::string(s.file) + ": connected number " +
                                              std::to_string(sa.connected_number) +
                                              ", expected " + std::to_string(s.c));
    const Run r = cli({"split", file(s.file), "--branch", s.branch, "--curve", "calC"});
    o.require(field(r.out, "connected number: ") == std::to_string(s.c),
              std::string(s.file) + ": CLI connected number differs");
    if (s.c != 2) continue;
    if (!sa.witness) {
      o.require(false, std::string(s.file) + ": no witness for c = 2");
      continue;
    }
    const oracle::Poly w = oracle::from_hompoly(*sa.witness);
    for (const auto& p : sa.system.points) {
      const std::array<Rational, 3> xyz{Rational(p.x()), Rational(p.y()), Rational(p.z())};
      o.require(oracle::eval(w, xyz) == 0,
                std::string(s.file) + ": witness does not vanish at " + p.to_string());
    }
    for (const auto& m : a.subcurve("calC").members) {
      o.require(!oracle::divides(m.form, *sa.witness),
                std::string(s.file) + ": witness divisible by " + m.label);
    }
    o.require(field(r.out, "witness: ") == sa.witness->to_string(),
              std::string(s.file) + ": CLI witness differs from the library witness");
  }
  const int pair1[2] = {analyze_split(load("pair1_B1.txt"), "B1", "calC").connected_number,
                        analyze_split(load("pair1_B2.txt"), "B2", "calC").connected_number};
  const int pair2[2] = {analyze_split(load("pair2_B1.txt"), "B1", "calC").connected_number,
                        analyze_split(load("pair2_B2.txt"), "B2", "calC").connected_number};
  o.require(pair1[0] != pair1[1] && pair2[0] != pair2[1], "c-values do not differ within a pair");
  return o;
}

// 4 -----------------------------------------------------------------------

Outcome combinatorics_criterion() {
  Outcome o;
  const auto equivalence_count = [&](const char* f1, const char* f2) {
    const Run r = cli({"compare", file(f1), file(f2)});
    if (r.exit_code != 0) return -1;
    return std::stoi(field(r.out, "equivalences: ").empty() ? "-1"
                                                            : field(r.out, "equivalences: "));
  };
  o.require(equivalence_count("pair1_B1.txt", "pair1_B2.txt") >= 1, "pair 1: no equivalence");
  o.require(equivalence_count("pair2_B1.txt", "pair2_B2.txt") >= 1, "pair 2: no equivalence");
  for (const char* f1 : {"pair1_B1.txt", "pair1_B2.txt"}) {
    for (const char* f2 : {"pair2_B1.txt", "pair2_B2.txt"}) {
      o.require(equivalence_count(f1, f2) == 0,
                std::string(f1) + " vs " + f2 + ": equivalence across pairs");
    }
  }

  const auto conic_triples = [&](const char* f) {
    return component_fingerprint(combinatorics(load(f)), "C").count(LocalKind::OrdinaryMultiple, 3);
  };
  o.require(conic_triples("pair1_B1.txt") == 2 && conic_triples("pair1_B2.txt") == 2,
            "pair 1: conic fingerprint does not have 2 triple points");
  o.require(conic_triples("pair2_B1.txt") == 4 && conic_triples("pair2_B2.txt") == 4,
            "pair 2: conic fingerprint does not have 4 triple points");

  const auto preserves = [&](const char* f1, const char* f2, const BranchSet& part) {
    const auto eqs = equivalences(combinatorics(load(f1)), combinatorics(load(f2)));
    if (eqs.empty()) return false;
    for (const auto& bij : eqs) {
      for (const auto& [from, to] : bij) {
        if (part.count(from) != part.count(to)) return false;
      }
    }
    return true;
  };
  o.require(preserves("pair1_B1.txt", "pair1_B2.txt", set_of({"L1", "L2", "L3"})),
            "pair 1: an equivalence moves {L1,L2,L3}");
  o.require(preserves("pair2_B1.txt", "pair2_B2.txt", set_of({"C", "L1"})),
            "pair 2: an equivalence moves {C,L1}");

  // h(L3) = L3 in the first pair.
  for (const auto& bij :
       equivalences(combinatorics(load("pair1_B1.txt")), combinatorics(load("pair1_B2.txt")))) {
    for (const auto& [from, to] : bij) {
      if (from == "L3") o.require(to == "L3", "pair 1: an equivalence moves L3");
    }
  }
  return o;
}

// 5 -----------------------------------------------------------------------

Outcome zariski_certificates() {
  Outcome o;
  const auto run = [&](const char* f1, const char* b1, const char* f2, const char* b2) {
    return cli({"zariski", file(f1), file(f2), "--branch1", b1, "--curve1", "calC", "--branch2",
                b2, "--curve2", "calC"});
  };
  const Run p1 = run("pair1_B1.txt", "B1", "pair1_B2.txt", "B2");
  o.require(p1.exit_code == 0, "pair 1: exit " + std::to_string(p1.exit_code));
  o.require(field(p1.out, "conclusion: ") == "CandidatePair", "pair 1: not CandidatePair");
  o.require(field(p1.out, "c_values: ") == "2 1", "pair 1: c-values are not 2 1");
  const Run p2 = run("pair2_B1.txt", "B1", "pair2_B2.txt", "B2");
  o.require(p2.exit_code == 0, "pair 2: exit " + std::to_string(p2.exit_code));
  o.require(field(p2.out, "conclusion: ") == "CandidatePair", "pair 2: not CandidatePair");
  o.require(field(p2.out, "c_values: ") == "1 2", "pair 2: c-values are not 1 2");
  for (const auto& [f, b] : std::vector<std::pair<const char*, const char*>>{
           {"pair1_B1.txt", "B1"}, {"pair1_B2.txt", "B2"}, {"pair2_B1.txt", "B1"},
           {"pair2_B2.txt", "B2"}}) {
    const Run self = run(f, b, f, b);
    o.require(self.exit_code == 3, std::string(f) + " against itself: exit " +
                                       std::to_string(self.exit_code));
    o.require(field(self.out, "conclusion: ") == "Inconclusive",
              std::string(f) + " against itself: not Inconclusive");
  }
  return o;
}

// 6 -----------------------------------------------------------------------

Outcome minimality() {
  Outcome o;
  for (const auto& [f1, f2] : std::vector<std::pair<const char*, const char*>>{
           {"pair1_B1.txt", "pair1_B2.txt"}, {"pair2_B1.txt", "pair2_B2.txt"}}) {
    const std::string tag = std::string(f1) + "/" + f2;
    const Run r = cli({"minimality", file(f1), file(f2)});
    o.require(r.exit_code == 0 && field(r.out, "overall: ") == "Minimal",
              tag + ": CLI does not report Minimal");

    const Arrangement a1 = load(f1);
    const Arrangement a2 = load(f2);
    const MinimalityReport rep = minimality_check(a1, a2);
    o.require(rep.minimal, tag + ": library does not report Minimal");
    o.require(rep.deletions.size() == a1.size(), tag + ": not every component was deleted");
    for (const auto& d : rep.deletions) {
      if (!d.certificate) {
        o.require(false, tag + ": deletion of " + d.deleted + " not certified");
        continue;
      }
      const auto& cert = *d.certificate;
      const bool is_conic = a1.component(d.deleted).is_conic();
      if (is_conic) {
        o.require(cert.base_rule == BaseRule::PureLinesAtMost9,
                  tag + ": conic deletion not certified by the line classification");
        continue;
      }
      o.require(cert.base_rule == BaseRule::ConicWithTangents,
                tag + ": deletion of " + d.deleted + " lacks an explicit ordering");
      o.require(std::all_of(cert.n_values.begin(), cert.n_values.end(),
                            [](unsigned n) { return n <= 2; }),
                tag + ": deletion of " + d.deleted + " has n_t > 2");
      o.require(revalidate(combinatorics(a1.without(d.deleted)), cert),
                tag + ": ordering for deletion of " + d.deleted + " does not replay");
      // The matched deletion on the other side has the same combinatorics.
      o.require(revalidate(combinatorics(a2.without(d.matched)), [&] {
                  OrderingCertificate mapped = cert;
                  std::map<std::string, std::string> m(rep.equivalence.begin(),
                                                       rep.equivalence.end());
                  for (auto& l : mapped.base) l = m[l];
                  for (auto& l : mapped.order) l = m[l];
                  return mapped;
                }()),
                tag + ": ordering does not transfer to the second arrangement");
    }
  }
  return o;
}

// 7 -----------------------------------------------------------------------

bool bezout_ok(const Arrangement& a) {
  const auto pts = singular_points(a);
  for (const auto& b : bezout_checks(a, pts)) {
    if (!b.ok()) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      unsigned total = 0;
      for (const auto& p : pts) {
        total += p.multiplicity(a.components()[i].label, a.components()[j].label);
      }
      if (total != a.components()[i].degree() * a.components()[j].degree()) return false;
    }
  }
  return true;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937 rng(20240229);

  for (const char* f : {"pair1_B1.txt", "pair1_B2.txt", "pair2_B1.txt", "pair2_B2.txt"}) {
    o.require(bezout_ok(load(f)), std::string("bezout fails on ") + f);
  }
  int bezout_failures = 0;
  for (int i = 0; i < 200; ++i) bezout_failures += !bezout_ok(oracle::random_arrangement(rng));
  o.require(bezout_failures == 0,
            "bezout fails on " + std::to_string(bezout_failures) + " random arrangements");

  int rank_failures = 0, kernel_failures = 0;
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int i = 0; i < 300; ++i) {
    const std::size_t r = dim(rng), c = dim(rng);
    std::uniform_int_distribution<std::size_t> rk(0, std::min(r, c));
    const auto m = oracle::random_matrix(rng, r, c, rk(rng));
    const QMatrix q = oracle::to_matrix(m, c);
    const std::size_t got = rank(q);
    rank_failures += got != oracle::naive_rank(m);
    const auto k = kernel_basis(q);
    bool ok = got + k.size() == c;
    for (const auto& v : k.vectors) ok = ok && is_zero(q.apply(v));
    kernel_failures += !ok;
  }
  o.require(rank_failures == 0, "Bareiss and naive rank disagree " +
                                    std::to_string(rank_failures) + " times");
  o.require(kernel_failures == 0, "kernel exactness fails " + std::to_string(kernel_failures) +
                                      " times");

  const char* files[] = {"pair1_B1.txt", "pair1_B2.txt", "pair2_B1.txt", "pair2_B2.txt"};
  const char* branches[] = {"B1", "B2", "B1", "B2"};
  for (int i = 0; i < 4; ++i) {
    const Arrangement a = load(files[i]);
    const auto ca = combinatorics(a);
    const int c = connected_number(a, a.subcurve(branches[i]), a.subcurve("calC"));
    for (int t = 0; t < 3; ++t) {
      const Arrangement moved = oracle::transform(a, oracle::random_transform(rng));
      const auto cm = combinatorics(moved);
      LabelBijection identity;
      for (const auto& l : ca.labels) identity.emplace_back(l, l);
      const auto eqs = equivalences(ca, cm);
      o.require(std::find(eqs.begin(), eqs.end(), identity) != eqs.end(),
                std::string(files[i]) + ": combinatorics change under a projective map");
      o.require(connected_number(moved, moved.subcurve(branches[i]), moved.subcurve("calC")) == c,
                std::string(files[i]) + ": connected number changes under a projective map");
      for (const auto& comp : a.components()) {
        if (!comp.is_line()) continue;
        std::set<std::string> prior;
        for (const auto& other : a.components()) {
          if (other.label < comp.label) prior.insert(other.label);
        }
        o.require(n_value(ca, comp.label, prior) == n_value(cm, comp.label, prior),
                  std::string(files[i]) + ": n-value of " + comp.label + " changes");
      }
    }
  }

  int roundtrip_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const Arrangement a = oracle::random_arrangement(rng, 8);
    const std::string text = a.serialize();
    const Arrangement b = parse(text);
    roundtrip_failures += !(a == b && b.serialize() == text);
  }
  for (const char* f : files) {
    const Arrangement a = load(f);
    roundtrip_failures += !(parse(a.serialize()) == a);
  }
  o.require(roundtrip_failures == 0,
            "parse/serialize round trip fails " + std::to_string(roundtrip_failures) + " times");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--cli") g_cli = argv[i + 1];
    if (key == "--data") g_data = argv[i + 1];
  }
  if (g_cli.empty() || g_data.empty()) {
    std::cerr << "usage: acceptance --cli <zpair executable> --data <example directory>\n";
    return 64;
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"singularity tables", singularity_tables},
      {"matrix dimensions", matrix_dimensions},
      {"connected numbers and witnesses", connected_numbers},
      {"combinatorics", combinatorics_criterion},
      {"zariski certificates", zariski_certificates},
      {"minimality", minimality},
      {"property suites", property_suites},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first
              << "\n";
    for (const auto& n : o.notes) std::cout << "       " << n << "\n";
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}

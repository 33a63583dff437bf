#include "zpair/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "zpair/error.hpp"

namespace zpair {

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9') || c == '\''; };
  if (!head(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), tail);
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == ':' || c == '=') {
      tokens.push_back({std::string(1, c), i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != ':' && line[i] != '=' && line[i] != '#') {
      ++i;
    }
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

// Returns the label of an existing component proportional to `form`, if any.
const Component* find_proportional(const std::vector<Component>& components,
                                   const HomPoly& form) {
  for (const auto& c : components) {
    if (c.form == form) return &c;
  }
  return nullptr;
}

}  // namespace

Rational conic_discriminant(const HomPoly& q) {
  if (q.degree() != 2) throw DimensionError("conic discriminant of a non-quadratic form");
  const auto& k = q.coefficients();  // x^2, xy, xz, y^2, yz, z^2
  const Rational a2 = 2 * k[0], d = k[1], e = k[2], b2 = 2 * k[3], f = k[4], c2 = 2 * k[5];
  return a2 * (b2 * c2 - f * f) - d * (d * c2 - f * e) + e * (d * f - b2 * e);
}

std::array<Rational, 6> conic_file_coefficients(const HomPoly& q) {
  const auto& k = q.coefficients();
  return {k[0], k[3], k[5], k[1], k[2], k[4]};
}

Component Component::line(std::string label, const Rational& a, const Rational& b,
                          const Rational& c) {
  return from_form(std::move(label), HomPoly::linear(a, b, c));
}

Component Component::conic(std::string label, std::span<const Rational, 6> f) {
  // File order x^2, y^2, z^2, xy, xz, yz to canonical x^2, xy, xz, y^2, yz, z^2.
  return from_form(std::move(label), HomPoly(2, QVector{f[0], f[3], f[4], f[1], f[5], f[2]}));
}

Component Component::from_form(std::string label, const HomPoly& form) {
  if (!valid_identifier(label)) throw InputError("invalid label '" + label + "'");
  if (form.degree() != 1 && form.degree() != 2) {
    throw InputError("component " + label + " must have degree 1 or 2");
  }
  if (form.is_zero()) throw InputError("component " + label + " has the zero form");
  Component c;
  c.label = std::move(label);
  c.form = form.primitive();
  if (form.degree() == 1) {
    c.kind = ComponentKind::Line;
  } else {
    c.kind = ComponentKind::Conic;
    if (conic_discriminant(c.form) == 0) {
      throw InputError("conic " + c.label + " is singular (determinant zero)");
    }
  }
  return c;
}

unsigned SubCurve::degree() const noexcept {
  unsigned d = 0;
  for (const auto& m : members) d += m.degree();
  return d;
}

HomPoly SubCurve::defining_polynomial() const {
  HomPoly out = HomPoly::constant(1);
  for (const auto& m : members) out = out * m.form;
  return out;
}

std::vector<std::string> SubCurve::labels() const {
  std::vector<std::string> out;
  for (const auto& m : members) out.push_back(m.label);
  return out;
}

bool SubCurve::contains(std::string_view label) const noexcept {
  return std::any_of(members.begin(), members.end(),
                     [&](const Component& c) { return c.label == label; });
}

HomPoly defining_polynomial(const SubCurve& s) { return s.defining_polynomial(); }
unsigned degree(const SubCurve& s) { return s.degree(); }

Arrangement::Arrangement(std::vector<Component> components,
                         std::map<std::string, std::vector<std::string>> subcurves)
    : components_(std::move(components)), subcurves_(std::move(subcurves)) {
  std::set<std::string> labels;
  std::size_t conics = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (!labels.insert(c.label).second) throw InputError("duplicate label " + c.label);
    if (c.is_conic()) ++conics;
    for (std::size_t j = 0; j < i; ++j) {
      if (components_[j].form == c.form) {
        throw InputError("components " + components_[j].label + " and " + c.label +
                         " are proportional");
      }
    }
  }
  if (conics > 1) throw InputError("at most one conic is supported");
  for (const auto& [name, members] : subcurves_) {
    if (!valid_identifier(name)) throw InputError("invalid curve name '" + name + "'");
    if (members.empty()) throw InputError("curve " + name + " is empty");
    std::set<std::string> seen;
    for (const auto& m : members) {
      if (!labels.count(m)) throw InputError("curve " + name + " references unknown label " + m);
      if (!seen.insert(m).second) throw InputError("curve " + name + " repeats label " + m);
    }
  }
}

std::optional<std::size_t> Arrangement::index_of(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].label == label) return i;
  }
  return std::nullopt;
}

const Component& Arrangement::component(std::string_view label) const {
  const auto i = index_of(label);
  if (!i) throw InputError("unknown component label " + std::string(label));
  return components_[*i];
}

const Component* Arrangement::conic() const noexcept {
  for (const auto& c : components_) {
    if (c.is_conic()) return &c;
  }
  return nullptr;
}

std::size_t Arrangement::line_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(components_.begin(), components_.end(),
                    [](const Component& c) { return c.is_line(); }));
}

SubCurve Arrangement::subcurve(std::string_view name) const {
  const auto it = subcurves_.find(std::string(name));
  if (it == subcurves_.end()) throw InputError("unknown curve name " + std::string(name));
  SubCurve s;
  s.name = it->first;
  for (const auto& label : it->second) s.members.push_back(component(label));
  return s;
}

SubCurve Arrangement::as_subcurve(std::string name) const {
  return SubCurve{std::move(name), components_};
}

Arrangement Arrangement::restricted(std::span<const std::string> labels) const {
  const std::set<std::string> keep(labels.begin(), labels.end());
  for (const auto& l : keep) component(l);  // unknown labels throw
  std::vector<Component> comps;
  for (const auto& c : components_) {
    if (keep.count(c.label)) comps.push_back(c);
  }
  std::map<std::string, std::vector<std::string>> subs;
  for (const auto& [name, members] : subcurves_) {
    if (std::all_of(members.begin(), members.end(),
                    [&](const std::string& m) { return keep.count(m) > 0; })) {
      subs.emplace(name, members);
    }
  }
  return Arrangement(std::move(comps), std::move(subs));
}

Arrangement Arrangement::without(std::string_view label) const {
  component(label);
  std::vector<std::string> keep;
  for (const auto& c : components_) {
    if (c.label != label) keep.push_back(c.label);
  }
  return restricted(keep);
}

std::string Arrangement::serialize() const {
  std::ostringstream os;
  for (const auto& c : components_) {
    if (c.is_line()) {
      const auto& k = c.form.coefficients();
      os << "line " << c.label << " : " << k[0].get_str() << " " << k[1].get_str() << " "
         << k[2].get_str() << "\n";
    } else {
      os << "conic " << c.label << " :";
      for (const auto& v : conic_file_coefficients(c.form)) os << " " << v.get_str();
      os << "\n";
    }
  }
  for (const auto& [name, members] : subcurves_) {
    os << "curve " << name << " =";
    for (const auto& m : members) os << " " << m;
    os << "\n";
  }
  return os.str();
}

Arrangement parse(std::string_view text) {
  std::vector<Component> components;
  std::map<std::string, std::vector<std::string>> subcurves;
  bool have_conic = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = tokenize(raw);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto fail = [&](std::size_t column, const std::string& what) -> ParseError {
      return ParseError(line_no, column, what);
    };
    const std::size_t eol_column = raw.size() + 1;
    auto expect = [&](std::size_t index, std::string_view what) {
      if (index >= tokens.size()) throw fail(eol_column, "expected " + std::string(what));
      return tokens[index];
    };

    const std::string& keyword = tokens[0].text;
    if (keyword == "line" || keyword == "conic") {
      const Token label = expect(1, "a label");
      if (!valid_identifier(label.text)) throw fail(label.column, "invalid label '" + label.text + "'");
      const Token colon = expect(2, "':'");
      if (colon.text != ":") throw fail(colon.column, "expected ':'");
      const std::size_t want = keyword == "line" ? 3 : 6;
      std::vector<Rational> coeffs;
      for (std::size_t i = 0; i < want; ++i) {
        const Token t = expect(3 + i, "a coefficient");
        Rational v;
        if (!parse_rational(t.text, v)) throw fail(t.column, "invalid coefficient '" + t.text + "'");
        coeffs.push_back(v);
      }
      if (tokens.size() > 3 + want) {
        throw fail(tokens[3 + want].column, "unexpected token '" + tokens[3 + want].text + "'");
      }
      for (const auto& c : components) {
        if (c.label == label.text) throw fail(label.column, "duplicate label " + label.text);
      }
      Component comp;
      try {
        if (keyword == "line") {
          comp = Component::line(label.text, coeffs[0], coeffs[1], coeffs[2]);
        } else {
          if (have_conic) throw fail(tokens[0].column, "at most one conic is supported");
          comp = Component::conic(label.text, std::span<const Rational, 6>(coeffs.data(), 6));
        }
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        throw fail(tokens[3].column, e.what());
      }
      if (const Component* other = find_proportional(components, comp.form)) {
        throw fail(label.column, "component " + label.text + " is proportional to " + other->label);
      }
      have_conic = have_conic || comp.is_conic();
      components.push_back(std::move(comp));
    } else if (keyword == "curve") {
      const Token name = expect(1, "a curve name");
      if (!valid_identifier(name.text)) throw fail(name.column, "invalid curve name '" + name.text + "'");
      if (subcurves.count(name.text)) throw fail(name.column, "duplicate curve " + name.text);
      const Token eq = expect(2, "'='");
      if (eq.text != "=") throw fail(eq.column, "expected '='");
      if (tokens.size() == 3) throw fail(eol_column, "curve " + name.text + " is empty");
      std::vector<std::string> members;
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        const bool known = std::any_of(components.begin(), components.end(),
                                       [&](const Component& c) { return c.label == t.text; });
        if (!known) throw fail(t.column, "unknown label " + t.text);
        if (std::find(members.begin(), members.end(), t.text) != members.end()) {
          throw fail(t.column, "label " + t.text + " repeated in curve " + name.text);
        }
        members.push_back(t.text);
      }
      subcurves.emplace(name.text, std::move(members));
    } else {
      throw fail(tokens[0].column, "unknown declaration '" + keyword + "'");
    }
    if (end == text.size()) break;
  }
  return Arrangement(std::move(components), std::move(subcurves));
}

Arrangement load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

}  // namespace zpair

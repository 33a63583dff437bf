#include "zpair/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

#include "zpair/error.hpp"
#include "zpair/incidence.hpp"
#include "zpair/report.hpp"

namespace zpair {

namespace {

constexpr double kCanvas = 800.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

struct Window {
  double xmin, xmax, ymin, ymax;

  bool contains(double u, double v, double slack = 0.0) const {
    const double sx = slack * (xmax - xmin);
    const double sy = slack * (ymax - ymin);
    return u >= xmin - sx && u <= xmax + sx && v >= ymin - sy && v <= ymax + sy;
  }
};

// Positions of the affine coordinates (u, v) and of the chart coordinate w
// inside a homogeneous triple.
std::array<int, 3> chart_axes(char chart) {
  switch (chart) {
    case 'x':
      return {1, 2, 0};
    case 'y':
      return {0, 2, 1};
    default:
      return {0, 1, 2};
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Canvas {
  Window w;
  double px(double u) const { return (u - w.xmin) / (w.xmax - w.xmin) * kCanvas; }
  double py(double v) const { return (w.ymax - v) / (w.ymax - w.ymin) * kCanvas; }
};

using Polyline = std::vector<std::pair<double, double>>;

std::vector<Polyline> clip_line(const Component& l, const std::array<int, 3>& axes,
                                const Window& win) {
  const auto& k = l.form.coefficients();
  const double a = k[axes[0]].get_d();
  const double b = k[axes[1]].get_d();
  const double c = k[axes[2]].get_d();
  std::vector<std::pair<double, double>> hits;
  if (b != 0) {
    for (double u : {win.xmin, win.xmax}) {
      const double v = -(a * u + c) / b;
      if (v >= win.ymin && v <= win.ymax) hits.emplace_back(u, v);
    }
  }
  if (a != 0) {
    for (double v : {win.ymin, win.ymax}) {
      const double u = -(b * v + c) / a;
      if (u >= win.xmin && u <= win.xmax) hits.emplace_back(u, v);
    }
  }
  if (hits.size() < 2) return {};
  std::sort(hits.begin(), hits.end());
  if (hits.front() == hits.back()) return {};
  return {Polyline{hits.front(), hits.back()}};
}

Rational eval_raw(const HomPoly& f, const std::array<Rational, 3>& p) {
  Rational acc = 0;
  const auto mons = monomials(f.degree());
  for (std::size_t i = 0; i < mons.size(); ++i) {
    Rational t = f.coefficients()[i];
    for (unsigned e = 0; e < mons[i].x; ++e) t *= p[0];
    for (unsigned e = 0; e < mons[i].y; ++e) t *= p[1];
    for (unsigned e = 0; e < mons[i].z; ++e) t *= p[2];
    acc += t;
  }
  return acc;
}

// A rational point of the conic taken from the arrangement's own
// intersections or from the coordinate lines.
std::optional<ProjPoint> rational_point_on(const Arrangement& a, const Component& q) {
  for (const auto& p : singular_points(a)) {
    if (p.is_rational() && p.has_branch(q.label)) return p.point();
  }
  for (unsigned i = 0; i < 3; ++i) {
    const Component axis = Component::from_form("axis", HomPoly::variable(i));
    const auto outcome = intersect_line_conic(axis, q);
    if (const auto* two = std::get_if<TwoRational>(&outcome)) return two->first;
    if (const auto* tan = std::get_if<Tangent>(&outcome)) return tan->point;
  }
  return std::nullopt;
}

void push_point(std::vector<Polyline>& lines, Polyline& current, bool ok, double u, double v) {
  if (ok) {
    current.emplace_back(u, v);
    return;
  }
  if (current.size() >= 2) lines.push_back(current);
  current.clear();
}

// Exact rational parameterization through p0: for a direction d the second
// intersection of the line p0 + t d with q is q(d) p0 - B(p0, d) d.
std::vector<Polyline> trace_conic_rational(const Component& q, const ProjPoint& p0,
                                           const std::array<int, 3>& axes, const Window& win,
                                           unsigned samples) {
  const std::array<Rational, 3> p{Rational(p0.x()), Rational(p0.y()), Rational(p0.z())};
  // Two unit vectors completing p0 to a basis.
  std::array<std::array<Rational, 3>, 3> unit{};
  for (int i = 0; i < 3; ++i) unit[i][i] = 1;
  std::array<Rational, 3> dir_a, dir_b;
  for (int skip = 2; skip >= 0; --skip) {
    if (p[skip] == 0) continue;
    std::vector<int> rest;
    for (int i = 0; i < 3; ++i) {
      if (i != skip) rest.push_back(i);
    }
    dir_a = unit[rest[0]];
    dir_b = unit[rest[1]];
    break;
  }

  std::vector<Polyline> lines;
  Polyline current;
  const double pi = std::numbers::pi;
  for (unsigned j = 0; j < samples; ++j) {
    const double angle = -pi / 2 + pi * (j + 0.5) / samples;
    Rational s(static_cast<long>(std::llround(std::tan(angle) * 65536.0)), 65536L);
    s.canonicalize();
    std::array<Rational, 3> d;
    for (int i = 0; i < 3; ++i) d[i] = dir_a[i] + s * dir_b[i];
    std::array<Rational, 3> pd;
    for (int i = 0; i < 3; ++i) pd[i] = p[i] + d[i];
    const Rational qd = eval_raw(q.form, d);
    const Rational polar = eval_raw(q.form, pd) - qd;  // q(p0) = 0
    std::array<Rational, 3> pt;
    for (int i = 0; i < 3; ++i) pt[i] = qd * p[i] - polar * d[i];

    const double w = pt[axes[2]].get_d();
    const double scale = std::max({std::fabs(pt[0].get_d()), std::fabs(pt[1].get_d()),
                                   std::fabs(pt[2].get_d())});
    bool ok = scale > 0 && std::fabs(w) > 1e-9 * scale;
    double u = 0, v = 0;
    if (ok) {
      u = pt[axes[0]].get_d() / w;
      v = pt[axes[1]].get_d() / w;
      ok = win.contains(u, v, 1.0);
    }
    push_point(lines, current, ok, u, v);
  }
  if (current.size() >= 2) {
    // The pencil is a closed loop; join the ends when both are visible.
    if (!lines.empty() && !lines.front().empty()) {
      Polyline joined = current;
      joined.insert(joined.end(), lines.front().begin(), lines.front().end());
      lines.front() = std::move(joined);
    } else {
      lines.push_back(current);
    }
  }
  return lines;
}

// Floating-point fallback: solve the conic column by column.
std::vector<Polyline> trace_conic_columns(const Component& q, const std::array<int, 3>& axes,
                                          const Window& win, unsigned samples) {
  // Coefficients of q(u, v, 1) = A v^2 + B(u) v + C(u).
  auto coeff = [&](std::array<unsigned, 3> exps) {
    Monomial m{exps[0], exps[1], exps[2]};
    return q.form.coefficient(m).get_d();
  };
  auto mono = [&](unsigned eu, unsigned ev) {
    std::array<unsigned, 3> e{0, 0, 0};
    e[axes[0]] = eu;
    e[axes[1]] = ev;
    e[axes[2]] = 2 - eu - ev;
    return coeff(e);
  };
  std::vector<Polyline> lines;
  std::array<Polyline, 2> current;
  for (unsigned j = 0; j <= samples; ++j) {
    const double u = win.xmin + (win.xmax - win.xmin) * j / samples;
    const double a = mono(0, 2);
    const double b = mono(1, 1) * u + mono(0, 1);
    const double c = mono(2, 0) * u * u + mono(1, 0) * u + mono(0, 0);
    std::array<bool, 2> ok{false, false};
    std::array<double, 2> v{0, 0};
    if (std::fabs(a) > 1e-12) {
      const double disc = b * b - 4 * a * c;
      if (disc >= 0) {
        const double r = std::sqrt(disc);
        v = {(-b - r) / (2 * a), (-b + r) / (2 * a)};
        ok = {true, true};
      }
    } else if (std::fabs(b) > 1e-12) {
      v[0] = -c / b;
      ok[0] = true;
    }
    for (int k = 0; k < 2; ++k) {
      push_point(lines, current[k], ok[k] && win.contains(u, v[k], 1.0), u, v[k]);
    }
  }
  for (auto& c : current) {
    if (c.size() >= 2) lines.push_back(c);
  }
  return lines;
}

Window default_window(const Arrangement& a, const std::array<int, 3>& axes) {
  std::vector<std::pair<double, double>> pts;
  const auto points = singular_points(a);
  const bool any_marker = std::any_of(points.begin(), points.end(), [](const SingularPoint& p) {
    return p.is_rational() && p.type.kind != LocalKind::Node;
  });
  for (const auto& p : points) {
    if (!p.is_rational()) continue;
    if (any_marker && p.type.kind == LocalKind::Node) continue;
    const auto& c = p.point().coords();
    if (c[axes[2]] == 0) continue;
    const double w = c[axes[2]].get_d();
    pts.emplace_back(c[axes[0]].get_d() / w, c[axes[1]].get_d() / w);
  }
  if (pts.empty()) return {-10, 10, -10, 10};
  double xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
  for (const auto& [u, v] : pts) {
    xmin = std::min(xmin, u);
    xmax = std::max(xmax, u);
    ymin = std::min(ymin, v);
    ymax = std::max(ymax, v);
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1.0});
  const double cx = (xmin + xmax) / 2;
  const double cy = (ymin + ymax) / 2;
  const double half = span * 0.6;
  return {cx - half, cx + half, cy - half, cy + half};
}

}  // namespace

void validate(const RenderConfig& config) {
  if (config.chart != 'x' && config.chart != 'y' && config.chart != 'z') {
    throw InputError(std::string("unknown chart '") + config.chart + "'");
  }
  if (config.samples < 16) throw InputError("at least 16 conic samples are required");
  if (!(config.stroke_width > 0)) throw InputError("stroke width must be positive");
  if (config.window) {
    const auto& w = *config.window;
    if (!(w[0] < w[1]) || !(w[2] < w[3])) {
      throw InputError("render window must have positive width and height");
    }
  }
}

std::string render_svg(const Arrangement& a, const RenderConfig& config) {
  validate(config);
  const auto axes = chart_axes(config.chart);
  const Window win = config.window ? Window{(*config.window)[0].get_d(), (*config.window)[1].get_d(),
                                            (*config.window)[2].get_d(), (*config.window)[3].get_d()}
                                   : default_window(a, axes);
  const Canvas canvas{win};
  const char names[3] = {'x', 'y', 'z'};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n";
  os << "<desc>chart " << config.chart << "=1; u=" << names[axes[0]] << ", v=" << names[axes[1]]
     << "; window " << fmt(win.xmin) << " " << fmt(win.xmax) << " " << fmt(win.ymin) << " "
     << fmt(win.ymax) << "</desc>\n";
  os << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\" "
        "stroke=\"#cccccc\"/>\n";
  os << "<g class=\"axes\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  if (win.ymin <= 0 && win.ymax >= 0) {
    os << "  <line x1=\"0.000\" y1=\"" << fmt(canvas.py(0)) << "\" x2=\"800.000\" y2=\""
       << fmt(canvas.py(0)) << "\"/>\n";
  }
  if (win.xmin <= 0 && win.xmax >= 0) {
    os << "  <line x1=\"" << fmt(canvas.px(0)) << "\" y1=\"0.000\" x2=\"" << fmt(canvas.px(0))
       << "\" y2=\"800.000\"/>\n";
  }
  os << "</g>\n";

  const auto& comps = a.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Component& c = comps[i];
    const auto color_it = config.colors.find(c.label);
    const std::string color = color_it != config.colors.end()
                                  ? color_it->second
                                  : kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
    std::vector<Polyline> lines;
    if (c.is_line()) {
      lines = clip_line(c, axes, win);
    } else if (const auto p0 = rational_point_on(a, c)) {
      lines = trace_conic_rational(c, *p0, axes, win, config.samples);
    } else {
      lines = trace_conic_columns(c, axes, win, config.samples);
    }
    os << "<g class=\"component\" id=\"" << escape(c.label) << "\" stroke=\"" << escape(color)
       << "\" stroke-width=\"" << fmt(config.stroke_width) << "\" fill=\"none\">\n";
    for (const auto& line : lines) {
      os << "  <polyline points=\"";
      for (std::size_t k = 0; k < line.size(); ++k) {
        if (k) os << " ";
        os << fmt(canvas.px(line[k].first)) << "," << fmt(canvas.py(line[k].second));
      }
      os << "\"/>\n";
    }
    os << "  <title>" << escape(c.label) << ": " << escape(c.form.to_string()) << " = 0</title>\n";
    os << "</g>\n";
  }

  os << "<g class=\"points\">\n";
  for (const auto& p : singular_points(a)) {
    if (!p.is_rational()) continue;
    const auto& co = p.point().coords();
    const bool at_infinity = co[axes[2]] == 0;
    double u, v;
    if (at_infinity) {
      // Placed on the frame in the direction of the point.
      if (p.type.kind == LocalKind::Node) continue;
      const double du = co[axes[0]].get_d();
      const double dv = co[axes[1]].get_d();
      const double hw = (win.xmax - win.xmin) / 2;
      const double hh = (win.ymax - win.ymin) / 2;
      const double t = std::min(du != 0 ? hw / std::fabs(du) : INFINITY,
                                dv != 0 ? hh / std::fabs(dv) : INFINITY);
      u = (win.xmin + win.xmax) / 2 + t * du;
      v = (win.ymin + win.ymax) / 2 + t * dv;
    } else {
      const double w = co[axes[2]].get_d();
      u = co[axes[0]].get_d() / w;
      v = co[axes[1]].get_d() / w;
      if (!win.contains(u, v)) continue;
    }
    const double x = canvas.px(u);
    const double y = canvas.py(v);
    if (p.type.kind == LocalKind::Node) {
      os << "  <circle class=\"node\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
         << "\" r=\"2.500\" fill=\"#555555\"/>\n";
      continue;
    }
    os << "  <g class=\"marker" << (at_infinity ? " at-infinity" : "") << "\">\n";
    os << "    <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"5.000\" fill=\""
       << (at_infinity ? "white\" stroke=\"black" : "black") << "\"/>\n";
    const bool right_half = x > kCanvas / 2;
    const double tx = right_half ? x - 7 : x + 7;
    const double ty = std::max(y - 7, 14.0);
    os << "    <text x=\"" << fmt(tx) << "\" y=\"" << fmt(ty) << "\" text-anchor=\""
       << (right_half ? "end" : "start") << "\" font-size=\"12\" font-family=\"sans-serif\">" << escape(brace_set(p.branches))
       << " " << escape(p.type.name()) << (at_infinity ? " at infinity " + p.point().to_string() : "")
       << "</text>\n";
    os << "  </g>\n";
  }
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace zpair

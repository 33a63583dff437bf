// zpair command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zpair/zpair.h"

namespace {

struct ArrangementDeleter {
  void operator()(zp_arrangement* a) const { zp_arrangement_free(a); }
};
using ArrangementPtr = std::unique_ptr<zp_arrangement, ArrangementDeleter>;

struct StringDeleter {
  void operator()(char* s) const { zp_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int report_error(zp_status status) {
  std::cerr << "error: " << zp_last_error() << "\n";
  return status == ZP_ERR_HYPOTHESIS ? 2 : status == ZP_INCONCLUSIVE ? 3 : 1;
}

bool load(const std::string& path, ArrangementPtr& out, int& exit_code) {
  zp_arrangement* raw = nullptr;
  const zp_status st = zp_arrangement_load(path.c_str(), &raw);
  if (st != ZP_OK) {
    std::cerr << path << ": ";
    exit_code = report_error(st);
    return false;
  }
  out.reset(raw);
  return true;
}

void print(char* text) {
  OwnedString owned(text);
  if (owned) std::cout << owned.get();
}

// Statuses that still come with a report to print.
int finish(zp_status st, char* text) {
  print(text);
  switch (st) {
    case ZP_OK:
      return 0;
    case ZP_INCONCLUSIVE:
      return 3;
    case ZP_ERR_HYPOTHESIS:
      if (!text) std::cerr << "error: " << zp_last_error() << "\n";
      return 2;
    default:
      return report_error(st);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of conic-line arrangements and Zariski pair certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", zp_version());

  std::string file1, file2;
  std::string branch, curve, branch1, curve1, branch2, curve2;
  std::string output;
  std::vector<std::string> window;
  char chart = 'z';
  unsigned samples = 0;

  auto* analyze = app.add_subcommand("analyze", "singular points, local types and Bezout checks");
  analyze->add_option("file", file1)->required();

  auto* compare = app.add_subcommand("compare", "combinatorial equivalences of two arrangements");
  compare->add_option("file1", file1)->required();
  compare->add_option("file2", file2)->required();

  auto* split = app.add_subcommand("split", "connected number of a (B, C) split");
  split->add_option("file", file1)->required();
  split->add_option("--branch", branch, "sub-curve B (branch locus)")->required();
  split->add_option("--curve", curve, "sub-curve C")->required();

  auto* zariski = app.add_subcommand("zariski", "Zariski pair certificate");
  zariski->add_option("file1", file1)->required();
  zariski->add_option("file2", file2)->required();
  zariski->add_option("--branch1", branch1)->required();
  zariski->add_option("--curve1", curve1)->required();
  zariski->add_option("--branch2", branch2)->required();
  zariski->add_option("--curve2", curve2)->required();

  auto* minimality = app.add_subcommand("minimality", "certify that every deletion is rigid");
  minimality->add_option("file1", file1)->required();
  minimality->add_option("file2", file2)->required();

  auto* render = app.add_subcommand("render", "SVG picture of the real points");
  render->add_option("file", file1)->required();
  render->add_option("-o,--output", output, "output SVG path")->required();
  render->add_option("--window", window, "xmin xmax ymin ymax")->expected(4);
  render->add_option("--chart", chart, "coordinate set to 1")->check(CLI::IsMember({'x', 'y', 'z'}));
  render->add_option("--samples", samples, "conic samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  int code = 0;
  ArrangementPtr a1, a2;
  if (!load(file1, a1, code)) return code;
  if (!file2.empty() && !load(file2, a2, code)) return code;

  char* text = nullptr;
  zp_status st = ZP_OK;
  bool reported = true;
  if (*analyze) {
    st = zp_analyze(a1.get(), &text);
  } else if (*compare) {
    st = zp_compare(a1.get(), a2.get(), nullptr, &text);
  } else if (*split) {
    st = zp_split(a1.get(), branch.c_str(), curve.c_str(), nullptr, nullptr, &text);
  } else if (*zariski) {
    st = zp_zariski(a1.get(), a2.get(), branch1.c_str(), curve1.c_str(), branch2.c_str(),
                    curve2.c_str(), &text);
  } else if (*minimality) {
    st = zp_minimality(a1.get(), a2.get(), &text);
  } else {
    reported = false;
  }
  if (reported) return finish(st, text);

  if (*render) {
    zp_render_options opts{};
    opts.chart = chart;
    opts.samples = samples;
    if (!window.empty()) {
      opts.has_window = 1;
      for (int i = 0; i < 4; ++i) opts.window[i] = window[i].c_str();
    }
    st = zp_render_svg(a1.get(), &opts, &text);
    if (st != ZP_OK) return report_error(st);
    OwnedString svg(text);
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << svg.get())) {
      std::cerr << "error: cannot write " << output << "\n";
      return 1;
    }
    return 0;
  }
  return 1;
}

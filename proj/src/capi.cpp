#include "zpair/zpair.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "zpair/arrangement.hpp"
#include "zpair/error.hpp"
#include "zpair/moduli.hpp"
#include "zpair/render.hpp"
#include "zpair/report.hpp"
#include "zpair/splitting.hpp"

struct zp_arrangement {
  zpair::Arrangement value;
};

namespace {

thread_local std::string g_last_error;

zp_status fail(zp_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <class F>
zp_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const zpair::HypothesisError& e) {
    return fail(ZP_ERR_HYPOTHESIS, e.what());
  } catch (const zpair::InputError& e) {
    return fail(ZP_ERR_INPUT, e.what());
  } catch (const zpair::DimensionError& e) {
    return fail(ZP_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ZP_ERR_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = copy_out(s);
}

}  // namespace

extern "C" {

const char* zp_version(void) { return "1.0.0"; }

const char* zp_last_error(void) { return g_last_error.c_str(); }

void zp_string_free(char* s) { std::free(s); }

zp_status zp_arrangement_parse(const char* text, zp_arrangement** out) {
  if (!text || !out) return fail(ZP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new zp_arrangement{zpair::parse(text)};
    return ZP_OK;
  });
}

zp_status zp_arrangement_load(const char* path, zp_arrangement** out) {
  if (!path || !out) return fail(ZP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new zp_arrangement{zpair::load_file(path)};
    return ZP_OK;
  });
}

void zp_arrangement_free(zp_arrangement* a) { delete a; }

zp_status zp_arrangement_serialize(const zp_arrangement* a, char** out) {
  if (!a || !out) return fail(ZP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_out(a->value.serialize());
    return ZP_OK;
  });
}

zp_status zp_arrangement_size(const zp_arrangement* a, size_t* out) {
  if (!a || !out) return fail(ZP_ERR_ARGUMENT, "null argument");
  *out = a->value.size();
  return ZP_OK;
}

zp_status zp_analyze(const zp_arrangement* a, char** report) {
  if (!a || !report) return fail(ZP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *report = copy_out(zpair::format_analysis(a->value));
    return ZP_OK;
  });
}

zp_status zp_compare(const zp_arrangement* a1, const zp_arrangement* a2,
                     size_t* equivalence_count, char** report) {
  if (!a1 || !a2) return fail(ZP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (equivalence_count) {
      *equivalence_count = zpair::equivalences(zpair::combinatorics(a1->value),
                                               zpair::combinatorics(a2->value))
                               .size();
    }
    set_out(report, zpair::format_comparison(a1->value, a2->value));
    return ZP_OK;
  });
}

zp_status zp_split(const zp_arrangement* a, const char* branch, const char* curve,
                   int* connected_number, int* projective_dimension, char** report) {
  if (!a || !branch || !curve) return fail(ZP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto s = zpair::analyze_split(a->value, branch, curve);
    if (connected_number) *connected_number = s.connected_number;
    if (projective_dimension) *projective_dimension = s.system.projective_dimension();
    set_out(report, zpair::format_split(s));
    if (!s.hypotheses.satisfied()) {
      return fail(ZP_ERR_HYPOTHESIS, "split hypotheses are not satisfied");
    }
    return ZP_OK;
  });
}

zp_status zp_zariski(const zp_arrangement* a1, const zp_arrangement* a2, const char* branch1,
                     const char* curve1, const char* branch2, const char* curve2,
                     char** report) {
  if (!a1 || !a2 || !branch1 || !curve1 || !branch2 || !curve2) {
    return fail(ZP_ERR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto cert = zpair::zariski_certificate(a1->value, a2->value, {branch1, curve1},
                                                 {branch2, curve2});
    set_out(report, zpair::format_certificate(cert));
    return cert.conclusion == zpair::Conclusion::CandidatePair ? ZP_OK : ZP_INCONCLUSIVE;
  });
}

zp_status zp_minimality(const zp_arrangement* a1, const zp_arrangement* a2, char** report) {
  if (!a1 || !a2) return fail(ZP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto r = zpair::minimality_check(a1->value, a2->value);
    set_out(report, zpair::format_minimality(r));
    return r.minimal ? ZP_OK : ZP_INCONCLUSIVE;
  });
}

zp_status zp_render_svg(const zp_arrangement* a, const zp_render_options* options, char** svg) {
  if (!a || !svg) return fail(ZP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    zpair::RenderConfig config;
    if (options) {
      if (options->chart) config.chart = options->chart;
      if (options->stroke_width > 0) config.stroke_width = options->stroke_width;
      if (options->samples) config.samples = options->samples;
      if (options->has_window) {
        std::array<zpair::Rational, 4> w;
        for (int i = 0; i < 4; ++i) {
          if (!options->window[i]) throw zpair::InputError("missing window bound");
          if (!zpair::parse_rational(options->window[i], w[i])) {
            throw zpair::InputError(std::string("bad window bound '") + options->window[i] + "'");
          }
        }
        config.window = w;
      }
    }
    *svg = copy_out(zpair::render_svg(a->value, config));
    return ZP_OK;
  });
}

}  // extern "C"

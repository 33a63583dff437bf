#pragma once

// Plain-text reports. Keys and sections appear in a fixed order so the
// output is byte-stable for golden-file comparison.

#include <string>
#include <vector>

#include "zpair/arrangement.hpp"
#include "zpair/incidence.hpp"
#include "zpair/moduli.hpp"
#include "zpair/splitting.hpp"

namespace zpair {

/// "{L1,L4,L5}"
std::string brace_set(const std::vector<std::string>& labels);

/// "7 ordinary triple points, 2 tacnodes, 10 nodes" or "no singular points".
std::string singular_summary(const std::vector<SingularPoint>& points);

std::string format_analysis(const Arrangement& a);
std::string format_comparison(const Arrangement& a1, const Arrangement& a2);
std::string format_split(const SplitAnalysis& s);
std::string format_certificate(const ZariskiCertificate& cert);
std::string format_minimality(const MinimalityReport& report);

}  // namespace zpair

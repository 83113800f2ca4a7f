#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "barystrat/analysis.hpp"
#include "barystrat/strata.hpp"

namespace barystrat {

// All renderers produce byte-deterministic output: canonical rational
// strings, canonical label order, fixed field order.

std::string verdict_kind_name(VerdictKind kind);
std::string case_tag_name(CaseTag tag);

// Stratum text with indices translated to the user's numbering.
std::string label_text_user(const Params& params, const StratumLabel& label);

std::string analysis_text(const Analysis& a);
std::string analysis_json(const Analysis& a);

std::string scan_text(const Params& base, const std::vector<ScanEntry>& entries);
std::string scan_json(const Params& base, const std::vector<ScanEntry>& entries);

// DOT digraph, node labels "S(k;i1,...)" in sorted-index form, one edge
// per line "lower -> upper".
std::string graph_dot(const SGraph& graph);

std::string singular_text(const std::vector<Rational>& values);
std::string singular_json(const Params& params, const Rational& upper,
                          const std::vector<Rational>& values);

std::string threshold_text(const Rational& r, const Params& others, std::size_t j,
                           const ThresholdResult& result);
std::string threshold_json(const Rational& r, const Params& others, std::size_t j,
                           const ThresholdResult& result);

}  // namespace barystrat

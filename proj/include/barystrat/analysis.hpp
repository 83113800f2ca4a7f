#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "barystrat/params.hpp"
#include "barystrat/strata.hpp"
#include "barystrat/stratum.hpp"

namespace barystrat {

// Case split of the non-contractibility certificate: a maximal regular
// stratum carries non-vanishing Z2 homology in degree 3k - 1, a maximal
// singular stratum (I nonempty, 1 not in I) in degree 3k + card(I) - 1.
enum class CaseTag { RegularStratum, SingularStratum };

struct Witness {
  StratumLabel label;  // 1 not in I
  long degree = 0;     // a degree where reduced Z2 homology does not vanish
  CaseTag case_tag = CaseTag::RegularStratum;

  bool operator==(const Witness&) const = default;
};

enum class VerdictKind {
  EmptyCoercive,
  SingularRho,
  SolvableMinMax,
  ContractibleInconclusive,
};

struct Verdict {
  VerdictKind kind = VerdictKind::EmptyCoercive;
  std::vector<Witness> witnesses;        // nonempty iff kind == SolvableMinMax
  std::vector<bool> stability_sorted;    // per sorted index; empty unless the
                                         // space is nonempty and r non-singular
  std::string advisory;
};

// p_j-stability of a nonempty space: every maximal stratum pins index j.
// Equivalent to the quantifier form (adjoining j to any weighted
// configuration below r stays below r, the empty configuration included);
// the quantifier form is kept in the oracle module and the two are tested
// against each other. Throws Error{empty_space}, Error{index_out_of_range}.
bool is_pj_stable(const Params& params, std::size_t j, const EnumLimits& limits = {});

// m >= 1: p_1-stability decides contractibility. m = 0: a nonempty union of
// regular strata is never contractible. Throws Error{empty_space}.
bool is_contractible(const Params& params, const EnumLimits& limits = {});

// One witness per maximal stratum whose index set omits 1 (for m = 0, the
// top regular stratum), canonically ordered; empty iff the space is empty
// or contractible. Requires r non-singular: throws Error{singular_rho}.
std::vector<Witness> noncontractibility_witnesses(const Params& params,
                                                  const EnumLimits& limits = {});

// Entry j-1 = is_pj_stable(params, j), sorted index order.
std::vector<bool> stability_profile(const Params& params, const EnumLimits& limits = {});

struct ThresholdResult {
  Rational alpha_star;
  bool clamped = false;  // true would mean every weight in (-1,0) stabilizes
};

// The contractibility threshold for a varying weight alpha_j against the
// remaining fixed weights: alpha* = G - 1 with
//   G = r - max{ chi0 : chi0 = k + sum_{i in I} (1 + alpha_i) < r,
//                I over subsets of the fixed weights, 0 included }.
// For alpha_j in (-1, alpha*) the full parameter set is p_j-stable, hence
// contractible; at alpha_j = alpha* the value r becomes singular.
// Requires r outside the singular set of the fixed weights alone:
// throws Error{singular_rho_others}.
ThresholdResult alpha_threshold(const Rational& r, const std::vector<Rational>& other_alphas,
                                const EnumLimits& limits = {});

// Full regime classification; never throws for valid Params (a singular r
// is a verdict kind, not an error).
Verdict solvability_verdict(const Params& params, const EnumLimits& limits = {});

// One-call bundle for reporting.
struct Analysis {
  Params params;
  std::uint64_t strata_count = 0;
  std::vector<StratumLabel> maximal;
  Verdict verdict;
};

Analysis analyze(const Params& params, const EnumLimits& limits = {});

struct ScanEntry {
  Rational lo, hi;  // open interval between consecutive singular values
  Verdict verdict;  // evaluated at the exact midpoint
};

// Partitions (0, r_max) at the singular values and classifies each open
// interval at its midpoint. Verdicts can only change across singular
// values, so the midpoint represents the whole interval.
std::vector<ScanEntry> scan_rho(const std::vector<Rational>& alphas, const Rational& r_max,
                                const EnumLimits& limits = {});

}  // namespace barystrat

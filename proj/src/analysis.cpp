#include "barystrat/analysis.hpp"

#include <algorithm>

#include "barystrat/errors.hpp"
#include "barystrat/singular.hpp"

namespace barystrat {

namespace {

bool all_maximal_contain(const std::vector<StratumLabel>& maximal, std::size_t j) {
  return std::all_of(maximal.begin(), maximal.end(),
                     [&](const StratumLabel& label) { return label.contains(j); });
}

std::vector<bool> profile_from_maximal(const Params& params,
                                       const std::vector<StratumLabel>& maximal) {
  std::vector<bool> stable(params.m());
  for (std::size_t j = 1; j <= params.m(); ++j) {
    stable[j - 1] = all_maximal_contain(maximal, j);
  }
  return stable;
}

std::vector<Witness> witnesses_from_maximal(const Params& params,
                                            const std::vector<StratumLabel>& maximal) {
  std::vector<Witness> out;
  for (const StratumLabel& label : maximal) {
    if (label.contains(1) && params.m() >= 1) continue;
    Witness w;
    w.label = label;
    w.degree = dimension(label);  // 3k - 1 for regular, 3k + card(I) - 1 otherwise
    w.case_tag = label.index_bits == 0 ? CaseTag::RegularStratum : CaseTag::SingularStratum;
    if (params.m() >= 1) {
      // Certificate inequalities: below r, and past r once index 1 joins.
      const Rational lower = chi(params, label);
      const Rational upper = lower + 1 + params.alphas[0];
      if (!(lower < params.r && params.r < upper)) {
        throw Error(errc::internal, "witness certificate inequalities failed for " +
                                        label_text(label));
      }
    }
    out.push_back(std::move(w));
  }
  return out;  // maximal is canonically ordered already
}

}  // namespace

bool is_pj_stable(const Params& params, std::size_t j, const EnumLimits& limits) {
  if (j < 1 || j > params.m()) {
    throw Error(errc::index_out_of_range,
                "index " + std::to_string(j) + " out of range (m = " +
                    std::to_string(params.m()) + ")",
                j);
  }
  std::vector<StratumLabel> maximal = maximal_strata(params, limits);
  if (maximal.empty()) {
    throw Error(errc::empty_space, "the space is empty; stability is undefined");
  }
  return all_maximal_contain(maximal, j);
}

bool is_contractible(const Params& params, const EnumLimits& limits) {
  std::vector<StratumLabel> maximal = maximal_strata(params, limits);
  if (maximal.empty()) {
    throw Error(errc::empty_space, "the space is empty; contractibility is undefined");
  }
  if (params.m() == 0) return false;  // nonempty unions of regular strata never are
  return all_maximal_contain(maximal, 1);
}

std::vector<Witness> noncontractibility_witnesses(const Params& params,
                                                  const EnumLimits& limits) {
  if (is_singular(params)) {
    throw Error(errc::singular_rho, "rho is a singular value (Definition 1.1)");
  }
  return witnesses_from_maximal(params, maximal_strata(params, limits));
}

std::vector<bool> stability_profile(const Params& params, const EnumLimits& limits) {
  std::vector<StratumLabel> maximal = maximal_strata(params, limits);
  if (maximal.empty()) {
    throw Error(errc::empty_space, "the space is empty; stability is undefined");
  }
  return profile_from_maximal(params, maximal);
}

ThresholdResult alpha_threshold(const Rational& r, const std::vector<Rational>& other_alphas,
                                const EnumLimits& limits) {
  const Params others = normalize_params(r, other_alphas);
  if (others.m() > limits.max_m) {
    throw Error(errc::size_limit,
                "m = " + std::to_string(others.m()) + " exceeds the enumeration limit max_m = " +
                    std::to_string(limits.max_m));
  }
  if (is_singular(others)) {
    throw Error(errc::singular_rho_others,
                "rho is a singular value of the fixed weights alone (threshold undefined)");
  }

  // Largest weighted cardinality reachable below r using the fixed weights
  // and any number of free points; 0 (nothing at all) counts.
  Rational best(0);
  std::vector<Rational> weights;
  weights.reserve(others.m());
  for (const Rational& a : others.alphas) weights.push_back(1 + a);

  auto walk = [&](auto&& self, std::size_t pos, const Rational& sum) -> void {
    // Best completion of this subset: the most free points still below r.
    Rational candidate = sum + largest_int_below(r - sum);
    if (candidate > best) best = candidate;
    for (std::size_t i = pos; i < weights.size(); ++i) {
      Rational next = sum + weights[i];
      if (next >= r) break;
      self(self, i + 1, next);
    }
  };
  walk(walk, 0, Rational(0));

  const Rational gap = r - best;
  if (gap <= 0) {
    throw Error(errc::internal, "threshold gap must be positive");
  }
  if (gap >= 1) {
    // Cannot happen when r avoids the reduced singular set; kept as the
    // documented clamp for robustness.
    return {Rational(0), true};
  }
  return {gap - 1, false};
}

Analysis analyze(const Params& params, const EnumLimits& limits) {
  Analysis a;
  a.params = params;

  if (is_singular(params)) {
    a.verdict.kind = VerdictKind::SingularRho;
    a.verdict.advisory =
        "rho is a singular value (Definition 1.1); stability and contractibility "
        "are classified only for rho outside the singular set";
    return a;
  }

  std::vector<StratumLabel> strata = enumerate_strata(params, limits);
  a.strata_count = strata.size();
  if (strata.empty()) {
    a.verdict.kind = VerdictKind::EmptyCoercive;
    a.verdict.advisory =
        "no admissible configurations: rho lies below the first singular value "
        "and the energy functional is coercive (Troyanov inequality)";
    if (params.m() >= 2) {
      a.verdict.advisory +=
          "; for m >= 2 this coercivity label generalizes the single-cone regime";
    }
    return a;
  }

  a.maximal = maximal_strata(params, strata);
  a.verdict.stability_sorted = profile_from_maximal(params, a.maximal);

  const bool p1_stable = params.m() >= 1 && a.verdict.stability_sorted[0];
  if (p1_stable) {
    a.verdict.kind = VerdictKind::ContractibleInconclusive;
    a.verdict.advisory =
        "the space is contractible (Theorem 1.1): min-max theory detects no "
        "topology change, so solvability is inconclusive here; Theorem 1.8 "
        "guarantees non-existence once some weight is close enough to -1 "
        "(no numeric threshold is available)";
  } else {
    a.verdict.kind = VerdictKind::SolvableMinMax;
    a.verdict.witnesses = witnesses_from_maximal(params, a.maximal);
    a.verdict.advisory =
        "the space is not contractible (Theorem 1.2 witnesses attached); "
        "min-max yields a solution (Theorem 1.5)";
  }
  return a;
}

Verdict solvability_verdict(const Params& params, const EnumLimits& limits) {
  return analyze(params, limits).verdict;
}

std::vector<ScanEntry> scan_rho(const std::vector<Rational>& alphas, const Rational& r_max,
                                const EnumLimits& limits) {
  // Validates the weights and r_max > 0 in one go.
  const Params bounds = normalize_params(r_max, alphas);

  std::vector<Rational> cuts = singular_values(bounds, 0, r_max, limits.max_labels);
  cuts.insert(cuts.begin(), Rational(0));
  if (cuts.back() != r_max) cuts.push_back(r_max);

  std::vector<ScanEntry> entries;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    ScanEntry entry;
    entry.lo = cuts[i];
    entry.hi = cuts[i + 1];
    Params probe = bounds;
    probe.r = (entry.lo + entry.hi) / 2;
    entry.verdict = solvability_verdict(probe, limits);
    if (entry.verdict.kind == VerdictKind::SingularRho) {
      throw Error(errc::internal, "scan midpoint unexpectedly singular");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace barystrat

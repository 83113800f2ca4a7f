#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "barystrat/params.hpp"
#include "barystrat/stratum.hpp"

namespace barystrat {

struct EnumLimits {
  std::uint64_t max_labels = std::uint64_t{1} << 20;
  std::size_t max_m = 24;  // enumeration is Theta(2^m) in the worst case
};

// Strict selection rule: nonempty label with chi < r.
bool is_admissible(const Params& params, const StratumLabel& label);

// Stratum inclusion, closed form: k2 >= k1 and card(I1 \ I2) <= k2 - k1.
// Equivalent to splitting I1 into a part inside I2 and a part absorbed by
// the extra free points; the split formulation lives in the oracle module
// and the two are tested against each other exhaustively.
bool precedes(const StratumLabel& a, const StratumLabel& b);

// Every admissible label, canonically ordered. For each k below r the
// index subsets are walked depth-first over the ascending weights, cutting
// a branch as soon as the running weighted cardinality reaches r - k
// (sound because the remaining weights are at least as large).
// Throws Error{size_limit} past limits.max_labels or limits.max_m.
std::vector<StratumLabel> enumerate_strata(const Params& params,
                                           const EnumLimits& limits = {});

// The unique decomposition into maximal strata: the precedence-maximal
// elements of enumerate_strata, canonically ordered (an antichain; empty
// iff the space is empty).
std::vector<StratumLabel> maximal_strata(const Params& params,
                                         const EnumLimits& limits = {});

// Same, over an already enumerated admissible set.
std::vector<StratumLabel> maximal_strata(const Params& params,
                                         const std::vector<StratumLabel>& admissible);

// Admissible strata with the cover relation of the inclusion order.
// Edges point from the smaller stratum to the larger one and are stored as
// (lower, upper) positions into `nodes`.
struct SGraph {
  std::vector<StratumLabel> nodes;  // canonical order
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

SGraph s_graph(const Params& params, const EnumLimits& limits = {});

// Maximal common substrata of two nonempty labels: the canonical finite
// presentation of the intersection (its down-set union is the full family
// of common substrata). Throws Error{empty_label}.
std::vector<StratumLabel> intersect_strata(const StratumLabel& a, const StratumLabel& b);

// The whole down-set of `label` over ambient index range {1..bound_m},
// nonempty labels only. Throws Error{empty_label} / Error{size_limit}.
std::vector<StratumLabel> substrata(const StratumLabel& label, std::size_t bound_m,
                                    const EnumLimits& limits = {});

}  // namespace barystrat

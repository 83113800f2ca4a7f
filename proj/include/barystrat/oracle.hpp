#pragma once

#include <cstddef>
#include <vector>

#include "barystrat/params.hpp"
#include "barystrat/stratum.hpp"

namespace barystrat::oracle {

// Deliberately naive reference implementations: direct transcriptions of
// the defining conditions, no pruning and no closed forms. They exist so
// the fast paths can be checked against something independent; they may be
// exponential without apology.

// Inclusion by explicit split search: some split I1 = I1' (+) I1'' has
// I1' inside I2 and card(I1'') <= k2 - k1.
bool naive_precedes(const StratumLabel& a, const StratumLabel& b);

// Direct quantifier check over ALL (k, I) with k <= k_cap, the empty
// configuration included. Requires k_cap >= r so the quantifier over k is
// exhausted (larger k cannot satisfy the hypothesis).
bool naive_pj_stable(const Params& params, std::size_t j, unsigned k_cap);

// Every label (k, I) with k <= k_cap, k + card(I) > 0, 1 not in I and
// chi(k, I) < r < chi(k, I + {1}), canonically ordered. Empty for m = 0
// (there is no index 1 to adjoin). Requires k_cap >= r.
std::vector<StratumLabel> naive_witness_search(const Params& params, unsigned k_cap);

// The full set of common substrata over ambient {1..m} (not just the
// maximal ones), via naive_precedes on both sides.
std::vector<StratumLabel> naive_intersection(const StratumLabel& a, const StratumLabel& b,
                                             std::size_t m);

}  // namespace barystrat::oracle

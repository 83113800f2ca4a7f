#pragma once

#include <cstddef>
#include <vector>

#include "barystrat/rational.hpp"

namespace barystrat {

// Validated problem parameters. `r` is rho/(4*pi); weights are kept sorted
// ascending so that index 1 always refers to the minimal weight, and
// `user_index_of_sorted` remembers where each sorted weight came from in
// the caller's ordering (1-based both ways). Immutable after construction.
struct Params {
  Rational r;
  std::vector<Rational> alphas;                  // sorted ascending, each in (-1, 0)
  std::vector<std::size_t> user_index_of_sorted; // sorted position -> user position

  std::size_t m() const { return alphas.size(); }

  // 1-based translation of a sorted index back to the user's numbering.
  std::size_t user_index(std::size_t sorted_index) const {
    return user_index_of_sorted[sorted_index - 1];
  }
};

// Hard representation limit: index sets are machine words.
inline constexpr std::size_t kMaxWeights = 64;

// Sorts the weights (stable, so ties keep the user's order), records the
// permutation and validates r > 0 and every weight in the open interval
// (-1, 0). Throws Error{invalid_rho}, Error{invalid_alpha, i} with the
// 1-based user index, or Error{size_limit} for more than kMaxWeights weights.
Params normalize_params(const Rational& r, const std::vector<Rational>& raw_alphas);

}  // namespace barystrat

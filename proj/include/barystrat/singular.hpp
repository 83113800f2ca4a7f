#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "barystrat/params.hpp"
#include "barystrat/rational.hpp"

namespace barystrat {

inline constexpr std::uint64_t kDefaultValueCap = std::uint64_t{1} << 20;

// All distinct values n + sum_{i in I} (1 + alpha_i) <= upper with n a
// natural number, I a subset of {1..m} \ {exclude} and n + card(I) > 0,
// sorted ascending. `exclude` is a 1-based sorted index, 0 for none.
// Throws Error{index_out_of_range} on a bad exclude, Error{size_limit}
// if the value set would exceed `cap`.
std::vector<Rational> singular_values(const Params& params, std::size_t exclude,
                                      const Rational& upper,
                                      std::uint64_t cap = kDefaultValueCap);

// Exact membership of params.r in the singular-value set.
bool is_singular(const Params& params);

}  // namespace barystrat

#include "barystrat/singular.hpp"

#include <set>

#include "barystrat/errors.hpp"

namespace barystrat {

namespace {

// Walks every subset of the weights 1 + alpha_i (ascending) whose sum stays
// <= upper, invoking visit(sum). The weights are strictly positive, so a
// subset is empty exactly when its sum is zero, and ascending order makes
// the break sound: once one weight overshoots, every later one does too.
template <typename Visit>
void walk_subset_sums(const std::vector<Rational>& weights, std::size_t pos,
                      const Rational& sum, const Rational& upper, const Visit& visit) {
  visit(sum);
  for (std::size_t i = pos; i < weights.size(); ++i) {
    Rational next = sum + weights[i];
    if (next > upper) break;
    walk_subset_sums(weights, i + 1, next, upper, visit);
  }
}

std::vector<Rational> plus_one(const Params& params, std::size_t exclude) {
  if (exclude > params.m()) {
    throw Error(errc::index_out_of_range,
                "exclude index " + std::to_string(exclude) + " out of range (m = " +
                    std::to_string(params.m()) + ")",
                exclude);
  }
  std::vector<Rational> weights;
  weights.reserve(params.m());
  for (std::size_t i = 1; i <= params.m(); ++i) {
    if (i == exclude) continue;
    weights.push_back(1 + params.alphas[i - 1]);
  }
  return weights;
}

}  // namespace

std::vector<Rational> singular_values(const Params& params, std::size_t exclude,
                                      const Rational& upper, std::uint64_t cap) {
  std::vector<Rational> weights = plus_one(params, exclude);
  std::set<Rational> values;
  if (upper > 0) {
    walk_subset_sums(weights, 0, Rational(0), upper, [&](const Rational& sum) {
      // n + card(I) > 0: the empty subset (sum 0) needs n >= 1.
      Rational value = sum == 0 ? Rational(1) : sum;
      for (; value <= upper; ++value) {
        values.insert(value);
        if (values.size() > cap) {
          throw Error(errc::size_limit,
                      "singular-value cap exceeded (" + std::to_string(cap) + ")");
        }
      }
    });
  }
  return {values.begin(), values.end()};
}

bool is_singular(const Params& params) {
  std::vector<Rational> weights = plus_one(params, 0);
  bool found = false;
  walk_subset_sums(weights, 0, Rational(0), params.r, [&](const Rational& sum) {
    if (found) return;
    Rational residue = params.r - sum;
    // The residue must be a natural number; nonzero when the subset is
    // empty, which holds automatically since r > 0.
    if (residue >= 0 && is_integer(residue) && (sum != 0 || residue > 0)) found = true;
  });
  return found;
}

}  // namespace barystrat

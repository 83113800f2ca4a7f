#include "barystrat/params.hpp"

#include <algorithm>
#include <numeric>

#include "barystrat/errors.hpp"

namespace barystrat {

Params normalize_params(const Rational& r, const std::vector<Rational>& raw_alphas) {
  if (r <= 0) {
    throw Error(errc::invalid_rho, "rho/(4pi) must be positive, got " + to_string(r));
  }
  if (raw_alphas.size() > kMaxWeights) {
    throw Error(errc::size_limit, "at most 64 weights are supported");
  }
  const Rational minus_one(-1);
  for (std::size_t i = 0; i < raw_alphas.size(); ++i) {
    if (!(raw_alphas[i] > minus_one && raw_alphas[i] < 0)) {
      throw Error(errc::invalid_alpha,
                  "alpha[" + std::to_string(i + 1) + "] = " + to_string(raw_alphas[i]) +
                      " outside the open interval (-1, 0)",
                  i + 1);
    }
  }

  std::vector<std::size_t> order(raw_alphas.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return raw_alphas[a] < raw_alphas[b];
  });

  Params params;
  params.r = r;
  params.alphas.reserve(raw_alphas.size());
  params.user_index_of_sorted.reserve(raw_alphas.size());
  for (std::size_t user_pos : order) {
    params.alphas.push_back(raw_alphas[user_pos]);
    params.user_index_of_sorted.push_back(user_pos + 1);
  }
  return params;
}

}  // namespace barystrat

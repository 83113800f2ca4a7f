#include "barystrat/oracle.hpp"

#include <algorithm>
#include <bit>

#include "barystrat/errors.hpp"

namespace barystrat::oracle {

namespace {

std::uint64_t full_mask(std::size_t m) {
  return m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
}

}  // namespace

bool naive_precedes(const StratumLabel& a, const StratumLabel& b) {
  if (b.k < a.k) return false;
  // Every split of I1: sub is the part required to sit inside I2, the rest
  // must be absorbed by the extra free points.
  std::uint64_t sub = a.index_bits;
  while (true) {
    const std::uint64_t rest = a.index_bits & ~sub;
    if ((sub & ~b.index_bits) == 0 &&
        std::popcount(rest) <= static_cast<int>(b.k - a.k)) {
      return true;
    }
    if (sub == 0) break;
    sub = (sub - 1) & a.index_bits;
  }
  return false;
}

bool naive_pj_stable(const Params& params, std::size_t j, unsigned k_cap) {
  if (j < 1 || j > params.m()) {
    throw Error(errc::index_out_of_range, "index " + std::to_string(j) + " out of range", j);
  }
  if (Rational(k_cap) < params.r) {
    throw Error(errc::internal, "k_cap must be at least r to exhaust the quantifier");
  }
  const std::uint64_t jbit = std::uint64_t{1} << (j - 1);
  const std::uint64_t mask = full_mask(params.m());
  for (unsigned k = 0; k <= k_cap; ++k) {
    for (std::uint64_t bits = 0;; ++bits) {
      StratumLabel label{k, bits};
      if (chi(params, label) < params.r &&
          chi(params, StratumLabel{k, bits | jbit}) >= params.r) {
        return false;
      }
      if (bits == mask) break;
    }
  }
  return true;
}

std::vector<StratumLabel> naive_witness_search(const Params& params, unsigned k_cap) {
  if (Rational(k_cap) < params.r) {
    throw Error(errc::internal, "k_cap must be at least r to exhaust the quantifier");
  }
  std::vector<StratumLabel> out;
  if (params.m() == 0) return out;
  const std::uint64_t mask = full_mask(params.m());
  for (unsigned k = 0; k <= k_cap; ++k) {
    for (std::uint64_t bits = 0;; ++bits) {
      if ((bits & 1u) == 0) {  // 1 not in I
        StratumLabel label{k, bits};
        if (!label.is_empty() && chi(params, label) < params.r &&
            params.r < chi(params, StratumLabel{k, bits | 1u})) {
          out.push_back(label);
        }
      }
      if (bits == mask) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StratumLabel> naive_intersection(const StratumLabel& a, const StratumLabel& b,
                                             std::size_t m) {
  if (a.is_empty() || b.is_empty()) {
    throw Error(errc::empty_label, "cannot intersect with the empty label");
  }
  const std::uint64_t mask = full_mask(m);
  std::vector<StratumLabel> out;
  for (unsigned k = 0; k <= std::min(a.k, b.k); ++k) {
    for (std::uint64_t bits = 0;; ++bits) {
      StratumLabel label{k, bits};
      if (!label.is_empty() && naive_precedes(label, a) && naive_precedes(label, b)) {
        out.push_back(label);
      }
      if (bits == mask) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace barystrat::oracle

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "barystrat/params.hpp"
#include "barystrat/rational.hpp"

namespace barystrat {

// A stratum label (k, I): k free points plus the pinned singular points
// indexed by I. Bit i-1 of `index_bits` stands for index i (1-based,
// referring to the sorted weight order of the Params it is evaluated
// against). The empty label (0, {}) is representable but is only ever a
// sentinel in stability quantifiers, never a stratum.
struct StratumLabel {
  unsigned k = 0;
  std::uint64_t index_bits = 0;

  unsigned pinned_count() const { return static_cast<unsigned>(std::popcount(index_bits)); }
  bool is_empty() const { return k == 0 && index_bits == 0; }
  bool contains(std::size_t index) const { return (index_bits >> (index - 1)) & 1u; }

  std::vector<std::size_t> indices() const;  // 1-based, ascending

  static StratumLabel of(unsigned k, std::span<const std::size_t> indices);
  static StratumLabel of(unsigned k, std::initializer_list<std::size_t> indices);

  bool operator==(const StratumLabel&) const = default;

  // Canonical order used everywhere a deterministic listing is needed.
  friend std::strong_ordering operator<=>(const StratumLabel& a, const StratumLabel& b) {
    if (a.k != b.k) return a.k <=> b.k;
    return a.index_bits <=> b.index_bits;
  }
};

// "S(k;i1,i2,...)" with ascending indices, e.g. "S(1;)" or "S(0;1,2)".
std::string label_text(const StratumLabel& label);

// Weighted cardinality k + sum_{i in I} (1 + alpha_i), exact.
// Throws Error{index_out_of_range} if I is not contained in {1..m}.
Rational chi(const Params& params, const StratumLabel& label);

// 3k + card(I) - 1. Throws Error{empty_label} on the empty label.
long dimension(const StratumLabel& label);

}  // namespace barystrat

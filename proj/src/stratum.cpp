#include "barystrat/stratum.hpp"

#include "barystrat/errors.hpp"

namespace barystrat {

std::vector<std::size_t> StratumLabel::indices() const {
  std::vector<std::size_t> out;
  out.reserve(pinned_count());
  for (std::size_t i = 1; i <= 64; ++i) {
    if ((index_bits >> (i - 1)) & 1u) out.push_back(i);
  }
  return out;
}

StratumLabel StratumLabel::of(unsigned k, std::span<const std::size_t> indices) {
  StratumLabel label{k, 0};
  for (std::size_t i : indices) {
    if (i < 1 || i > 64) {
      throw Error(errc::index_out_of_range, "stratum index " + std::to_string(i) + " out of range", i);
    }
    label.index_bits |= std::uint64_t{1} << (i - 1);
  }
  return label;
}

StratumLabel StratumLabel::of(unsigned k, std::initializer_list<std::size_t> indices) {
  return of(k, std::span<const std::size_t>(indices.begin(), indices.size()));
}

std::string label_text(const StratumLabel& label) {
  std::string s = "S(" + std::to_string(label.k) + ";";
  bool first = true;
  for (std::size_t i : label.indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  s += ")";
  return s;
}

Rational chi(const Params& params, const StratumLabel& label) {
  const std::size_t m = params.m();
  const std::uint64_t allowed = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  if (label.index_bits & ~allowed) {
    throw Error(errc::index_out_of_range,
                "stratum pins an index beyond m = " + std::to_string(m));
  }
  Rational sum(label.k);
  for (std::size_t i = 1; i <= m; ++i) {
    if (label.contains(i)) sum += 1 + params.alphas[i - 1];
  }
  return sum;
}

long dimension(const StratumLabel& label) {
  if (label.is_empty()) {
    throw Error(errc::empty_label, "the empty label (0, {}) is not a stratum");
  }
  return 3L * label.k + label.pinned_count() - 1;
}

}  // namespace barystrat

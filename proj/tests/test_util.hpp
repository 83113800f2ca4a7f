#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "barystrat/params.hpp"
#include "barystrat/rational.hpp"
#include "barystrat/stratum.hpp"

namespace bt = barystrat;

inline bt::Rational Q(const std::string& text) { return bt::parse_rational(text); }

inline std::vector<bt::Rational> QV(std::initializer_list<std::string> texts) {
  std::vector<bt::Rational> out;
  for (const std::string& t : texts) out.push_back(Q(t));
  return out;
}

inline bt::Params P(const std::string& r, std::initializer_list<std::string> alphas) {
  return bt::normalize_params(Q(r), QV(alphas));
}

inline bt::StratumLabel L(unsigned k, std::initializer_list<std::size_t> indices) {
  return bt::StratumLabel::of(k, indices);
}

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace barystrat {

enum class errc {
  bad_rational,
  invalid_rho,
  invalid_alpha,
  index_out_of_range,
  empty_label,
  size_limit,
  empty_space,
  singular_rho,
  singular_rho_others,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message, std::size_t index = 0)
      : std::runtime_error(std::move(message)), code_(code), index_(index) {}

  errc code() const noexcept { return code_; }

  // 1-based user index for invalid_alpha / index_out_of_range; 0 otherwise.
  std::size_t index() const noexcept { return index_; }

 private:
  errc code_;
  std::size_t index_;
};

}  // namespace barystrat

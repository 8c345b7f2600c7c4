#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace yetter {

// Size caps shared by every module. Defaults can be overridden through the
// CYCLO_CONDUCTOR_CAP and SYMMETRIZER_DIM_CAP environment variables.
struct Limits {
  int conductor_cap = 360;
  std::size_t symmetrizer_dim_cap = 20000;
  std::size_t symmetrizer_max_degree = 10;
  std::size_t group_order_cap = 20000;
  std::size_t inner_group_cap = 10000;

  static Limits from_env();
};

// Process-wide limits, read from the environment on first use.
const Limits& limits();

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace yetter

// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace gfc {

// Division by zero in the field kernel (zero inverse, degenerate Moebius map).
struct division_by_zero : std::domain_error {
  explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

// Repeated points where pairwise-distinct points are required.
struct degenerate_input : std::invalid_argument {
  explicit degenerate_input(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter outside the admissible domain Omega (a coordinate in {0,1} or a collision).
struct omega_violation : std::invalid_argument {
  explicit omega_violation(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed serialized input.
struct parse_error : std::invalid_argument {
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gfc

#pragma once

#include <stdexcept>

namespace a1lab {

/// Thrown when an L^p integral of a power weight diverges (p >= c/(c-1)).
/// Distinct from std::domain_error: the arguments are well-formed, the
/// integral simply does not exist.
class NonIntegrableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace a1lab

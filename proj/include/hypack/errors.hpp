#pragma once

#include <stdexcept>

namespace hypack {

/// Argument outside the admissible parameter range (exit code 2 in the CLI).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Degenerate or inconsistent geometric configuration.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypack

#pragma once

#include <stdexcept>

namespace chebdyn {

// Thrown when an input violates a mathematical precondition: zero where a
// unit is needed, a non-prime place, a point colliding with alpha, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace chebdyn

#pragma once

#include <stdexcept>
#include <string>

namespace vcg {

// A named parameter condition failed.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed a configured size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two maps handed over as a cochain complex do not compose to zero.
class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A class or product is not expressible in the named generators of the ring at hand.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vcg

#pragma once

#include <stdexcept>
#include <string>

namespace indbbw {

/// Input violates a documented precondition (malformed weight, bad rank, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A desk-scale limit was hit (enumeration cap, dimension cap, rank overflow).
/// Not a mathematical outcome.
class CapacityExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed. Always an implementation bug.
class InternalInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A limit computation could not establish a stable cohomological degree.
class NonStableLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace indbbw

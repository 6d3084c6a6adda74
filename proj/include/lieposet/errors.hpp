#pragma once

#include <stdexcept>
#include <string>

namespace lieposet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generator (i,j) with i >= j; natural labelings require i < j.
struct NaturalityViolation : Error {
  using Error::Error;
};

// An element label outside 1..n.
struct OutOfRange : Error {
  using Error::Error;
};

struct HeightTooSmall : Error {
  using Error::Error;
};

struct HeightTooLarge : Error {
  using Error::Error;
};

// Enumeration request beyond the configured element-count ceiling.
struct ResourceBound : Error {
  using Error::Error;
};

// Malformed poset text/JSON input; message names the offending line.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace lieposet

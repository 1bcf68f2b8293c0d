#pragma once

#include <stdexcept>
#include <string>

namespace ulrichnorm {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two classes (or a class and a ring) live in different class rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A codimension, rank or index falls outside the supported range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// r(d-1) is odd, so c1 = (r/2)(K + (n+1)H) is not an integral class.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Chern or section data contradicts a closed form it must satisfy.
class InconsistentData : public Error {
 public:
  using Error::Error;
};

/// A linear system has no unique solution.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (numbers, presets, command-line values).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace ulrichnorm

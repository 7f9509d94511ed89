#pragma once

#include <stdexcept>
#include <string>

namespace blowdown {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or dangling input: unknown ids, bad dimensions, bad syntax.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A well-formed request outside an operation's domain (e.g. Milnor data of a
/// chain that is not class T).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Declared data contradicts something the engine computed, or a homomorphism
/// fails to respect the relations of its source.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace blowdown

#pragma once

#include <stdexcept>
#include <string>

namespace vit1d {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or inconsistent configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A tensor or matrix has the wrong dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// File could not be read or is not a supported container.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Input data violates an operation's preconditions (too short, empty split, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

// Caller violated an API contract (out-of-range step, unsorted events, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Non-finite values appeared in weights or activations.
class NumericFault : public Error {
 public:
  using Error::Error;
};

// Checkpoint directory is inconsistent with its manifest.
class CorruptCheckpoint : public Error {
 public:
  using Error::Error;
};

// Label string does not parse under the declared grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace vit1d

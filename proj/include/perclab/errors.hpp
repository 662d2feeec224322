#pragma once

#include <stdexcept>
#include <string>

namespace perclab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Odd point total or a degree outside [0, d_max].
class InvalidDegreeSequence : public Error {
 public:
  using Error::Error;
};

// Simplicity rejection exceeded its retry cap.
class SamplingFailure : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed input file or I/O failure.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace perclab

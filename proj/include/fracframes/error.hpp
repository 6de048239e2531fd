#pragma once

#include <stdexcept>
#include <string>

namespace fracframes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Gamma function or hypergeometric parameter hit a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at a point where a function is singular or undefined.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the admissible range of a family or operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A series or iteration did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Dimension or size mismatch between matrices, grids and spaces.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration file or CLI override; the message carries the field path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracframes

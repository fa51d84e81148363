#pragma once

#include <stdexcept>
#include <string>

namespace torusfs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grid dimensions are not powers of two or are too small.
class SizingError : public Error {
 public:
  using Error::Error;
};

/// A pointwise evaluator produced a non-finite value.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Requested spectral cutoff cannot be resolved by the grid.
class AliasingError : public Error {
 public:
  using Error::Error;
};

/// Requested degree exceeds the retained coefficient box, or the product
/// spectra needed by a decomposition check do not fit in it.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Grid too coarse for the kernel-convolution quadrature.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two fields that must share a grid do not.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// Bracket search for an Orlicz norm never found an admissible scale.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace torusfs

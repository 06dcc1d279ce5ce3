#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proxima {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point does not belong to the space of the metric it is evaluated with.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid input: empty sets, duplicate points, non-finite
/// coordinates, a map that is not total, a non-square distance table.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace proxima

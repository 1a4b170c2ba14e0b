#pragma once

#include <stdexcept>
#include <string>

namespace biharm {

/// Base class for every error raised by the library.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad model kind, non-finite parameters, out-of-range arguments.
class InvalidArgument : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A chart point outside the model's valid domain, or mismatched base points.
class InvalidPoint : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Parameter outside the patch domain, or a difference stencil that leaves it.
class OutOfDomain : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Rank < 2 Jacobian of an immersion, or a zero-speed curve point.
class DegenerateImmersion : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// An operation whose precondition on the input surface does not hold
/// (e.g. the reduced system on a patch that is not CMC).
class PreconditionFailed : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace biharm

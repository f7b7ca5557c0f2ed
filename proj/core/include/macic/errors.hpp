#pragma once

#include <stdexcept>
#include <string>

namespace macic {

/// Vectors or systems of incompatible ambient dimension were combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A maximization over a polyhedron has no finite optimum, or a bounded
/// polytope was required and the input is unbounded.
class UnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation required a nonempty polyhedron.
class EmptyPolytopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set-function table lacks an entry a region builder needs.
class MissingEntryError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace macic

#pragma once

#include <stdexcept>
#include <string>

namespace molp {

/// Root of every error thrown by this library.
class MolpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (bad JSON, bad rational literal, missing field).
class ParseError : public MolpError {
 public:
  using MolpError::MolpError;
};

/// Vector/matrix lengths that disagree with the declared variable count.
class DimensionError : public MolpError {
 public:
  using MolpError::MolpError;
};

/// A constraint relation other than "<=" in a problem document.
class RelationError : public MolpError {
 public:
  using MolpError::MolpError;
};

/// The feasible region {x : Ax <= b, x >= 0} is empty.
class InfeasibleRegion : public MolpError {
 public:
  using MolpError::MolpError;
};

/// The feasible region is unbounded, so classification beyond the
/// Gal-Leberling test is refused.
class UnboundedRegion : public MolpError {
 public:
  using MolpError::MolpError;
};

/// A single objective has no finite maximum over the region.
class UnboundedObjective : public MolpError {
 public:
  using MolpError::MolpError;
};

/// A point passed to an efficiency test does not lie in the region.
class InfeasibleInput : public MolpError {
 public:
  using MolpError::MolpError;
};

}  // namespace molp

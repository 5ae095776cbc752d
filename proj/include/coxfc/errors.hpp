#pragma once

#include <stdexcept>
#include <string>

namespace coxfc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid Coxeter matrix or graph file.
class InputError : public Error {
 public:
  using Error::Error;
};

// Node name or index outside the matrix.
class UnknownNodeError : public Error {
 public:
  using Error::Error;
};

// A set that must be a connected component of the odd graph is not one.
class NotAnOddComponentError : public Error {
 public:
  using Error::Error;
};

// Subset passed to classify_connected is not connected.
class NotConnectedError : public Error {
 public:
  using Error::Error;
};

// Chain operations need the odd graph on the component to be a tree.
class NotATreeError : public Error {
 public:
  using Error::Error;
};

// No (unique) chain path between the requested nodes.
class NoPathError : public Error {
 public:
  using Error::Error;
};

// Label outside {1,2,3,4,5,6,inf}; the exact engine cannot represent it.
class UnsupportedLabelError : public Error {
 public:
  using Error::Error;
};

// reflection_along requires a root of unit norm.
class NotUnitRootError : public Error {
 public:
  using Error::Error;
};

// Operation requires a finite (spherical) visible subgroup.
class NotSphericalError : public Error {
 public:
  using Error::Error;
};

class BadArgumentsError : public Error {
 public:
  using Error::Error;
};

// Search depth limit reached before the requested element was resolved.
class DepthExceededError : public Error {
 public:
  using Error::Error;
};

// Enumeration element cap reached.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// More than one of {spherical even-component, focus, half-focus} detected
// for a single odd component; the classifier refuses to guess.
class CaseConflictError : public Error {
 public:
  using Error::Error;
};

// 64-bit rational arithmetic left the representable range.
class ArithmeticOverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxfc

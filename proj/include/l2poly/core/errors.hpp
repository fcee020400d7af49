#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace l2poly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// The system (or the polyhedron it describes) has no real solution.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// A difference-constraint matrix contains a cycle of negative total length.
/// `cycle` holds the 0-based vertex sequence i1, ..., im (closing edge im -> i1 implied).
class NegativeCycleError : public Error {
 public:
  NegativeCycleError(std::vector<int> cycle, const std::string& what)
      : Error(what), cycle_(std::move(cycle)) {}
  const std::vector<int>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<int> cycle_;
};

class EmptySlice : public Error {
 public:
  using Error::Error;
};

/// An internal structural guarantee (row shape of an L2 description) did not hold.
class AssertionViolation : public Error {
 public:
  using Error::Error;
};

/// Lattice enumeration would exceed the configured point cap.
class VolumeCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace l2poly

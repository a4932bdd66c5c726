#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pnc {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied an argument outside the operation's contract
/// (odd dimension, wrong coefficient count, non-finite input).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  DimensionMismatch(int lhs, int rhs)
      : InvalidArgument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                        std::to_string(rhs)) {}
};

/// Mathematically well-formed request that has no value here: nodal
/// points, divergent iterations, results outside the double range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The value lies on one or more nodal hypersurfaces rho_k = 0.
/// `planes()` holds the offending 1-based plane indices.
class NodalSingularity : public DomainError {
 public:
  explicit NodalSingularity(std::vector<int> planes);
  const std::vector<int>& planes() const noexcept { return planes_; }

 private:
  std::vector<int> planes_;
};

class NonConvergence : public DomainError {
 public:
  using DomainError::DomainError;
};

class Overflow : public DomainError {
 public:
  using DomainError::DomainError;
};

class UndefinedRadius : public DomainError {
 public:
  using DomainError::DomainError;
};

class OnBoundary : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularPath : public DomainError {
 public:
  using DomainError::DomainError;
};

class AssemblyOverflow : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Off-block mass survived the block diagonalization. Indicates a bug.
class BlockStructureViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace pnc

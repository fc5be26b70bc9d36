#pragma once
// Error types thrown by the simulation library.

#include <stdexcept>
#include <string>

namespace dfsim {

// Base class for all library errors so callers can catch one type.
class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public SimError {
 public:
  using SimError::SimError;
};

class NonHermitianInput : public SimError {
 public:
  using SimError::SimError;
};

class SiteOutOfRange : public SimError {
 public:
  using SimError::SimError;
};

class NotDecoherenceFree : public SimError {
 public:
  using SimError::SimError;
};

class LeakageExceeded : public SimError {
 public:
  using SimError::SimError;
};

class StateNotCyclic : public SimError {
 public:
  using SimError::SimError;
};

class DegenerateGeometricPhase : public SimError {
 public:
  using SimError::SimError;
};

class NotUnitary : public SimError {
 public:
  using SimError::SimError;
};

class StepTooLarge : public SimError {
 public:
  using SimError::SimError;
};

class StateInvalid : public SimError {
 public:
  using SimError::SimError;
};

}  // namespace dfsim

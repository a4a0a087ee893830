#pragma once

#include <stdexcept>
#include <string>

namespace symhilb {

// Bad caller input: malformed weights, wrong arity, unmet preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal cross-check failed. Never expected on correct code paths.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exact_core
class DenominatorVanishesAtZero : public InputError {
 public:
  using InputError::InputError;
};
class InsufficientPrefix : public InputError {
 public:
  using InputError::InputError;
};
class ReconstructionMismatch : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

// circle_hilbert
class ZeroWeight : public InputError {
 public:
  using InputError::InputError;
};
class DegenerateWeights : public InputError {
 public:
  using InputError::InputError;
};
class OracleMismatch : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

// laurent_analysis
class PartitionPointsMismatch : public InputError {
 public:
  using InputError::InputError;
};
class UnsupportedDimension : public InputError {
 public:
  using InputError::InputError;
};
class InsufficientCoefficients : public InputError {
 public:
  using InputError::InputError;
};

// finite_group
class PrimitiveCoverFailure : public VerificationError {
 public:
  using VerificationError::VerificationError;
};
class TheoremInconsistency : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

// diophantine_scan
class NotApplicable : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace symhilb

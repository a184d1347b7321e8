#pragma once

#include <stdexcept>
#include <string>

namespace msr {

// Invalid or inconsistent configuration values.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File read/write failures; message carries the path.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Zero-variance or otherwise unusable signal fed to a correlation stage.
struct DegenerateSignalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Range pairing whose circles cannot intersect at y >= 0.
struct InfeasiblePairingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoDetectionsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoAssociationsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace msr

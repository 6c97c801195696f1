#pragma once

#include <stdexcept>
#include <string>

namespace specact {

/// Input violates a structural invariant (bad file, handshake mismatch, ...).
struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input is well formed but the operation is undefined there
/// (singular momentum, vanishing form factor, degenerate truncation).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The exact path cannot represent the requested value.
struct UnsupportedExact : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace specact

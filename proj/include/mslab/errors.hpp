#pragma once

#include <stdexcept>
#include <string>

namespace mslab {

// Configuration / input problems (CLI exit code 2).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Profiles with a single color: entropy and Dirichlet forms vanish
// identically, so every constant is 0/0.
struct DegenerateSpaceError : ConfigError {
    using ConfigError::ConfigError;
};

// A word that does not match its profile's color counts.
struct MalformedStateError : ConfigError {
    using ConfigError::ConfigError;
};

// An exact operation refused because the state space exceeds a cap
// (CLI exit code 3).
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

}  // namespace mslab

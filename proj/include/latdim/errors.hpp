// Error types shared across modules; the CLI maps them onto exit codes.

#pragma once

#include <stdexcept>

namespace latdim {

/// A requested verification lies outside the hypotheses of the statement it
/// mechanizes; the message names the violated hypothesis.  CLI exit code 2.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The instance is sound but outside the reach of exact rational arithmetic
/// (e.g. no rational isotropic vector exists).  CLI exit code 3.
struct UnsupportedInstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace latdim

#pragma once

#include <stdexcept>
#include <string>

namespace itlab {

// Invalid configuration or input outside the documented domain.
// The CLI maps this to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation could not produce a trustworthy answer (no bracket,
// reliability collapse, violated internal invariant).  Exit code 3.
struct solve_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace itlab

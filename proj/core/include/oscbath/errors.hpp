// errors.hpp — exception taxonomy shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace oscbath {

// Invalid or unparsable run configuration. CLI exit code 1.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A resource guard tripped: combinatorial blowup, dimension cap, budget.
// CLI exit code 2.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure: domain error, overflow, non-convergent quadrature.
// CLI exit code 2.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verified inequality failed outside the flagged known-discrepancy variants.
// CLI exit code 3.
struct bound_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace oscbath

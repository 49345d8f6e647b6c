#pragma once

#include <stdexcept>
#include <string>

namespace passband {

// Adaptive rule ran out of subdivisions (or could no longer split an
// interval) with the error estimate still above tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Semi-infinite integrand does not decay as declared.
class DecayViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Pointwise kernel evaluation at a band edge (+-a, +-b).
class SingularArgumentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Density violates condition (1); alpha / extension are undefined.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Density support intersects the open band.
class SupportOverlapsBandError : public InfeasibleError {
public:
    using InfeasibleError::InfeasibleError;
};

// Malformed density document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace passband

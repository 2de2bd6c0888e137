#pragma once

#include <stdexcept>
#include <string>

namespace bufplan {

// Bad input: malformed documents, broken invariants, missing files.
// The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver/simulation failures: infeasible LPs, iteration caps, residuals
// out of tolerance. The CLI maps these to exit code 2.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bufplan

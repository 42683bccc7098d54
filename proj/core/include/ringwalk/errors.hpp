#pragma once

#include <stdexcept>
#include <string>

namespace ringwalk {

// Invalid domain input (bad lattice parameters, node out of range, ...).
class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation failed to reach its accuracy or convergence target.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericError {
public:
    QuadratureError(const std::string& msg, double achieved, double target)
        : NumericError(msg), achieved_error(achieved), target_error(target) {}

    double achieved_error;
    double target_error;
};

}  // namespace ringwalk

#pragma once

#include <stdexcept>
#include <string>

namespace qpt {

// Malformed or out-of-contract arguments. The CLI maps these to exit code 1.
class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Runtime numerical failure (non-convergence, tolerance violation, overflow).
// The CLI maps these to exit code 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation requested exactly on a singular locus: a gapless mode, the LMG
// h = 1 line, a degenerate ground state in a spectral sum.
class SingularInput : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Discretization box too small: wavefunction amplitude leaks to the boundary.
class GridError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace qpt

#pragma once

#include <vector>

namespace qpt::detail {

struct TridiagGround {
    double value;
    std::vector<double> vector; // normalized in the Euclidean sense
};

// Lowest eigenpair of a symmetric tridiagonal matrix, by Sturm-sequence
// bisection for the eigenvalue and shifted inverse iteration for the vector.
TridiagGround tridiag_ground(const std::vector<double>& diag,
                             const std::vector<double>& sub);

} // namespace qpt::detail

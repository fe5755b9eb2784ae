#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "smallmat.hpp"

namespace nvmem {

struct NotHermitianError : std::runtime_error {
    explicit NotHermitianError(double residual)
        : std::runtime_error("matrix is not Hermitian (residual " + std::to_string(residual) + ")") {}
};

struct NoConvergenceError : std::runtime_error {
    NoConvergenceError() : std::runtime_error("Jacobi iteration did not converge in 100 sweeps") {}
};

// Eigendecomposition of a small complex Hermitian matrix.
//
// Ordering and phase are pinned so that results are reproducible bit for bit:
//   - eigenvalues ascending, ties kept in first-encountered order,
//   - in each eigenvector the entry of largest magnitude is real and
//     non-negative (ties resolved toward the lowest index).
struct EigenSystem {
    std::vector<double> eigenvalues;  // ascending
    CMat eigenvectors;                // columns match eigenvalues
    double residual_norm = 0.0;       // max_i ||H v_i - w_i v_i|| / ||H||
};

// Cyclic two-sided complex Jacobi rotations. The input is validated against
// a Hermiticity tolerance of 1e-10 relative and symmetrized as (H + H^+)/2
// before the sweeps. Termination: off-diagonal Frobenius norm below
// 1e-13 * ||H||_F, capped at 100 full sweeps.
EigenSystem eigh(const CMat& h);

}  // namespace nvmem

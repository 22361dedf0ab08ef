#pragma once

#include "fent/types.hpp"

namespace fent {

/// Full eigensystem of a Hermitian matrix, eigenvalues ascending.
/// vectors.col(k) is the unit eigenvector belonging to values(k).
struct EigenSystem {
  RealVector values;
  Matrix vectors;
};

/// Cyclic Jacobi diagonalization for dense Hermitian matrices.
///
/// Sweeps zero out off-diagonal entries with phased plane rotations until
/// the off-diagonal Frobenius norm drops below tol * ||m||_F. Intended for
/// the small (dim <= 32) matrices this library works with; deterministic,
/// no pivot heuristics.
EigenSystem jacobi_hermitian(Matrix m, double tol = 1e-15, int max_sweeps = 100);

}  // namespace fent

#pragma once

#include "symplectica/matrix.hpp"

namespace symplectica {

// Relative tolerances shared across the library.
inline constexpr double kTolSym = 1e-12;   // symmetry acceptance
inline constexpr double kTolEig = 1e-10;   // eigendecomposition residuals
inline constexpr double kTolPd = 1e-12;    // positive definiteness margin
inline constexpr double kTolCond = 1e-14;  // smallest admissible lambda_min/lambda_max
inline constexpr double kTolSymp = 1e-10;  // symplectic form residuals
inline constexpr double kTolWill = 1e-9;   // Williamson residuals

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  SquareMatrix vectors;        // orthonormal columns, vectors.col(k) <-> values[k]

  SquareMatrix reconstruct() const;  // Q diag(values) Q^T
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
/// Converged when max off-diagonal <= 1e-14 * ||S||_F, hard cap 64 sweeps.
/// Ordering is deterministic: ascending values, ties by first significantly
/// nonzero component, sign fixed so the largest-magnitude component is positive.
/// Throws NotSymmetric or NoConvergence.
EigenDecomposition sym_eig(const SquareMatrix& s);

bool is_symmetric(const SquareMatrix& m, double tol = kTolSym);

/// (M + M^T) / 2
SquareMatrix symmetrize(const SquareMatrix& m);

}  // namespace symplectica

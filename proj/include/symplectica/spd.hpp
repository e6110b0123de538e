#pragma once

#include "symplectica/eig.hpp"
#include "symplectica/matrix.hpp"

namespace symplectica {

/// Symmetric positive definite matrix. Construction goes through validate(),
/// which symmetrizes exactly and checks lambda_min > kTolPd * trace / n.
class SpdMatrix {
 public:
  /// Throws NotSymmetric or NotPositiveDefinite.
  static SpdMatrix validate(const SquareMatrix& s);

  /// For matrices that are SPD by construction (spectral assembly, principal
  /// blocks of a validated SPD matrix). Symmetrizes, skips the eigen check.
  static SpdMatrix trusted(const SquareMatrix& s);

  const SquareMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit SpdMatrix(SquareMatrix m) : m_(std::move(m)) {}
  SquareMatrix m_;
};

SpdMatrix validate_spd(const SquareMatrix& s);

/// R with R R = S, via sym_eig.
SpdMatrix spd_sqrt(const SpdMatrix& s);

/// S^{-1/2}. Throws IllConditioned when lambda_min/lambda_max < kTolCond.
SpdMatrix spd_inv_sqrt(const SpdMatrix& s);

/// lambda_max / lambda_min.
double condition_number(const SpdMatrix& s);

SpdMatrix direct_sum(const SpdMatrix& a, const SpdMatrix& b);

}  // namespace symplectica

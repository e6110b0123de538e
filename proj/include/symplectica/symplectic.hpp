#pragma once

#include "symplectica/spd.hpp"

namespace symplectica {

/// J = [[0, I], [-I, 0]] of size 2n x 2n.
SquareMatrix standard_j(int n);

struct SymplecticCheck {
  bool symplectic;
  double residual;  // ||M^T J M - J||_max
};

/// Throws OddDimension.
SymplecticCheck is_symplectic(const SquareMatrix& m, double tol = kTolSymp);

/// Matrix with ||M^T J M - J||_max <= kTolSymp, checked at construction.
class SymplecticMatrix {
 public:
  static SymplecticMatrix validate(const SquareMatrix& m);
  const SquareMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  explicit SymplecticMatrix(SquareMatrix m) : m_(std::move(m)) {}
  SquareMatrix m_;
};

/// -J M^T J, the group inverse of a symplectic M.
SquareMatrix symplectic_inverse(const SquareMatrix& m);

/// Williamson normal form: m^T A m = diag(d) (+) diag(d), columns ordered
/// [x_1..x_n y_1..y_n], d ascending and positive.
struct WilliamsonForm {
  SymplecticMatrix m;
  std::vector<double> d;
};

struct SymplecticPair {
  std::vector<double> x;
  std::vector<double> y;
  double d;
};

/// Columns k and n+k of wf.m.
SymplecticPair williamson_pair(const WilliamsonForm& wf, int k);

struct WilliamsonResiduals {
  double form;        // ||m^T A m - D (+) D||_max
  double symplectic;  // ||m^T J m - J||_max
};

WilliamsonResiduals williamson_residuals(const SpdMatrix& a, const WilliamsonForm& wf);

/// Symplectic spectrum of A, ascending. Throws OddDimension.
std::vector<double> symplectic_eigenvalues(const SpdMatrix& a);

/// Full Williamson decomposition via the skew form K = A^{1/2} J A^{1/2}.
/// Throws OddDimension or DegeneratePairing.
WilliamsonForm williamson(const SpdMatrix& a);

/// Closed-form Williamson decomposition of E (+) G: takes the orthonormal
/// eigenvectors v_k of G^{1/2} E G^{1/2}, sets u_k = sqrt(d_k) G^{-1/2} v_k,
/// x_k = (0, u_k), y_k = (-d_k^{-1} G u_k, 0). Throws DimensionMismatch.
WilliamsonForm block_diag_williamson(const SpdMatrix& e, const SpdMatrix& g);

/// sorted { sqrt(eta_j gamma_j - beta_j^2) } for diagonal blocks.
/// Throws NotPositiveDefinite when some eta_j gamma_j - beta_j^2 <= 0.
std::vector<double> diagonal_symplectic_spectrum(std::span<const double> eta,
                                                 std::span<const double> gamma,
                                                 std::span<const double> beta);

struct PartialTraceIdentity {
  double lhs;         // tr(W^T (E (+) G) W) = 2 sum_{j<=k} d_j(E (+) G)
  double rhs;         // tr(W^T A W)
  double j_residual;  // ||W^T J_{2n} W - J_{2k}||_max
};

/// W = [x_1..x_k y_1..y_k] taken from wf (built from the diagonal blocks of A).
/// Throws IndexOutOfRange for k outside [1, n].
PartialTraceIdentity partial_trace_identity(const SpdMatrix& a, const WilliamsonForm& wf,
                                            int k);

}  // namespace symplectica

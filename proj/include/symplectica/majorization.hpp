#pragma once

#include <span>
#include <vector>

namespace symplectica {

enum class MajorizationKind { WeakSupermajorization, Majorization };

/// Verdict with the full partial-sum ledger. For the weak form,
/// holds <=> worst_margin >= -tol_used; majorization additionally
/// requires |sum x - sum y| <= tol * max(1, |sum y|).
struct MajorizationVerdict {
  bool holds;
  MajorizationKind kind;
  std::vector<double> k_sums_x;  // ascending-order partial sums of x
  std::vector<double> k_sums_y;
  double worst_margin;  // min_k (k_sums_x[k] - k_sums_y[k])
  double sum_gap;       // |sum x - sum y|
  double tol_used;

  /// Smallest 1-based k with k_sums_x[k] - k_sums_y[k] < -tol, 0 if none.
  int first_violation() const;
};

/// Default verdict tolerance for computed spectra: 1e-9 * max(1, ||y||_inf).
double default_majorization_tol(std::span<const double> y);

/// x prec^w y: every ascending partial sum of x dominates y's.
/// Throws LengthMismatch.
MajorizationVerdict weak_supermajorize(std::span<const double> x, std::span<const double> y,
                                       double tol);

/// x prec y: weak supermajorization plus total-sum equality.
MajorizationVerdict majorize(std::span<const double> x, std::span<const double> y,
                             double tol);

}  // namespace symplectica

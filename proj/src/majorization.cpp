#include "symplectica/majorization.hpp"

#include <algorithm>
#include <cmath>

#include "symplectica/errors.hpp"

namespace symplectica {

namespace {

std::vector<double> ascending_partial_sums(std::span<const double> v) {
  std::vector<double> sorted(v.begin(), v.end());
  std::stable_sort(sorted.begin(), sorted.end());
  double acc = 0.0;
  for (double& x : sorted) {
    acc += x;
    x = acc;
  }
  return sorted;
}

MajorizationVerdict build(std::span<const double> x, std::span<const double> y, double tol,
                          MajorizationKind kind) {
  if (x.size() != y.size() || x.empty())
    throw Error(ErrorKind::LengthMismatch, "vectors must have equal nonzero length");
  for (double v : x)
    if (!std::isfinite(v)) throw Error(ErrorKind::BadInput, "non-finite entry in x");
  for (double v : y)
    if (!std::isfinite(v)) throw Error(ErrorKind::BadInput, "non-finite entry in y");

  MajorizationVerdict verdict;
  verdict.kind = kind;
  verdict.tol_used = tol;
  verdict.k_sums_x = ascending_partial_sums(x);
  verdict.k_sums_y = ascending_partial_sums(y);
  verdict.worst_margin = verdict.k_sums_x[0] - verdict.k_sums_y[0];
  for (size_t k = 1; k < verdict.k_sums_x.size(); ++k)
    verdict.worst_margin =
        std::min(verdict.worst_margin, verdict.k_sums_x[k] - verdict.k_sums_y[k]);
  verdict.sum_gap = std::fabs(verdict.k_sums_x.back() - verdict.k_sums_y.back());

  verdict.holds = verdict.worst_margin >= -tol;
  if (kind == MajorizationKind::Majorization)
    verdict.holds = verdict.holds &&
                    verdict.sum_gap <= tol * std::max(1.0, std::fabs(verdict.k_sums_y.back()));
  return verdict;
}

}  // namespace

int MajorizationVerdict::first_violation() const {
  for (size_t k = 0; k < k_sums_x.size(); ++k)
    if (k_sums_x[k] - k_sums_y[k] < -tol_used) return static_cast<int>(k) + 1;
  return 0;
}

double default_majorization_tol(std::span<const double> y) {
  double peak = 0.0;
  for (double v : y) peak = std::max(peak, std::fabs(v));
  return 1e-9 * std::max(1.0, peak);
}

MajorizationVerdict weak_supermajorize(std::span<const double> x, std::span<const double> y,
                                       double tol) {
  return build(x, y, tol, MajorizationKind::WeakSupermajorization);
}

MajorizationVerdict majorize(std::span<const double> x, std::span<const double> y, double tol) {
  return build(x, y, tol, MajorizationKind::Majorization);
}

}  // namespace symplectica

#include "symplectica/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symplectica/kernels.hpp"

namespace symplectica {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kOffDiagStop = 1e-14;  // relative to ||S||_F

double max_offdiag(const SquareMatrix& a) {
  const int n = a.dim();
  double r = 0.0;
  for (int p = 0; p < n - 1; ++p)
    for (int q = p + 1; q < n; ++q) r = std::max(r, std::fabs(a(p, q)));
  return r;
}

// A <- R^T A R and V <- V R for the Givens rotation R in the (p, q) plane.
// Column and row passes are elementwise independent in k; the parallel path
// reproduces the serial arithmetic exactly.
void apply_rotation(SquareMatrix& a, SquareMatrix& v, int p, int q, double c, double s) {
  const int n = a.dim();
  const bool par = n >= parallel_threshold();
#pragma omp parallel for schedule(static) if (par)
  for (int k = 0; k < n; ++k) {
    const double akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
#pragma omp parallel for schedule(static) if (par)
  for (int k = 0; k < n; ++k) {
    const double apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
#pragma omp parallel for schedule(static) if (par)
  for (int k = 0; k < n; ++k) {
    const double vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

int first_significant_row(const SquareMatrix& v, int col) {
  const int n = v.dim();
  double largest = 0.0;
  for (int i = 0; i < n; ++i) largest = std::max(largest, std::fabs(v(i, col)));
  const double thr = 1e-12 * largest;
  for (int i = 0; i < n; ++i)
    if (std::fabs(v(i, col)) > thr) return i;
  return n;
}

}  // namespace

bool is_symmetric(const SquareMatrix& m, double tol) {
  const int n = m.dim();
  const double scale = std::max(1.0, max_abs(m));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(m(i, j) - m(j, i)) > tol * scale) return false;
  return true;
}

SquareMatrix symmetrize(const SquareMatrix& m) {
  const int n = m.dim();
  SquareMatrix s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = (m(i, j) + m(j, i)) / 2.0;
  return s;
}

SquareMatrix EigenDecomposition::reconstruct() const {
  SquareMatrix qd = vectors;
  const int n = qd.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) qd(i, j) *= values[j];
  return matmul(qd, transpose(vectors));
}

EigenDecomposition sym_eig(const SquareMatrix& s) {
  s.require_finite();
  if (!is_symmetric(s, kTolSym))
    throw Error(ErrorKind::NotSymmetric, "sym_eig input exceeds symmetry tolerance");

  const int n = s.dim();
  SquareMatrix a = symmetrize(s);
  SquareMatrix v = SquareMatrix::identity(n);
  const double stop = kOffDiagStop * frobenius_norm(a);

  int sweeps = 0;
  while (max_offdiag(a) > stop) {
    if (sweeps++ == kMaxSweeps)
      throw Error(ErrorKind::NoConvergence, "Jacobi sweep limit exceeded");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        apply_rotation(a, v, p, q, c, t * c);
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }

  // Deterministic ordering: ascending values, exact ties by the row of the
  // first significant eigenvector component, sign so the largest-magnitude
  // component is positive.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> lead(n);
  for (int j = 0; j < n; ++j) lead[j] = first_significant_row(v, j);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    if (a(i, i) != a(j, j)) return a(i, i) < a(j, j);
    return lead[i] < lead[j];
  });

  EigenDecomposition out{std::vector<double>(n), SquareMatrix(n)};
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    out.values[j] = a(src, src);
    int arg = 0;
    for (int i = 1; i < n; ++i)
      if (std::fabs(v(i, src)) > std::fabs(v(arg, src))) arg = i;
    const double flip = v(arg, src) < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) out.vectors(i, j) = flip * v(i, src);
  }
  return out;
}

}  // namespace symplectica

#include "symplectica/kernels.hpp"

#include <cmath>

namespace symplectica {

namespace {

constexpr int kParallelThreshold = 64;

void check_same_dim(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix dimensions differ");
}

// One output row of C = A B. Shared by the serial and parallel paths so both
// run the identical accumulation order.
inline void matmul_row(const double* a, const double* b, double* c, int n, int i) {
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += a[static_cast<size_t>(i) * n + k] * b[static_cast<size_t>(k) * n + j];
    c[static_cast<size_t>(i) * n + j] = s;
  }
}

// Row i of C = A^T B: dot of A's column i with B's columns.
inline void matmul_tn_row(const double* a, const double* b, double* c, int n, int i) {
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += a[static_cast<size_t>(k) * n + i] * b[static_cast<size_t>(k) * n + j];
    c[static_cast<size_t>(i) * n + j] = s;
  }
}

}  // namespace

int parallel_threshold() { return kParallelThreshold; }

namespace serial {

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b) {
  check_same_dim(a, b);
  const int n = a.dim();
  SquareMatrix c(n);
  for (int i = 0; i < n; ++i) matmul_row(a.data(), b.data(), c.data(), n, i);
  return c;
}

SquareMatrix matmul_tn(const SquareMatrix& a, const SquareMatrix& b) {
  check_same_dim(a, b);
  const int n = a.dim();
  SquareMatrix c(n);
  for (int i = 0; i < n; ++i) matmul_tn_row(a.data(), b.data(), c.data(), n, i);
  return c;
}

SquareMatrix congruence(const SquareMatrix& m, const SquareMatrix& a) {
  return serial::matmul_tn(m, serial::matmul(a, m));
}

}  // namespace serial

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b) {
  check_same_dim(a, b);
  const int n = a.dim();
  if (n < kParallelThreshold) return serial::matmul(a, b);
  SquareMatrix c(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) matmul_row(a.data(), b.data(), c.data(), n, i);
  return c;
}

SquareMatrix matmul_tn(const SquareMatrix& a, const SquareMatrix& b) {
  check_same_dim(a, b);
  const int n = a.dim();
  if (n < kParallelThreshold) return serial::matmul_tn(a, b);
  SquareMatrix c(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) matmul_tn_row(a.data(), b.data(), c.data(), n, i);
  return c;
}

SquareMatrix congruence(const SquareMatrix& m, const SquareMatrix& a) {
  return matmul_tn(m, matmul(a, m));
}

std::vector<double> matvec(const SquareMatrix& a, std::span<const double> x) {
  const int n = a.dim();
  if (static_cast<int>(x.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "matvec length mismatch");
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += a(i, k) * x[k];
    y[i] = s;
  }
  return y;
}

double max_abs(const SquareMatrix& m) {
  double r = 0.0;
  for (double v : m.entries()) r = std::max(r, std::fabs(v));
  return r;
}

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
  check_same_dim(a, b);
  double r = 0.0;
  for (size_t i = 0; i < a.entries().size(); ++i)
    r = std::max(r, std::fabs(a.entries()[i] - b.entries()[i]));
  return r;
}

double frobenius_norm(const SquareMatrix& m) {
  double s = 0.0;
  for (double v : m.entries()) s += v * v;
  return std::sqrt(s);
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace symplectica

#include "symplectica/matrix.hpp"

#include <cmath>

namespace symplectica {

namespace {
void check_dim(int n) {
  if (n < 1) throw Error(ErrorKind::BadInput, "matrix dimension must be >= 1");
}
}  // namespace

SquareMatrix::SquareMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
  check_dim(n);
}

SquareMatrix::SquareMatrix(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
  check_dim(n);
  if (a_.size() != static_cast<size_t>(n) * n)
    throw Error(ErrorKind::BadInput, "entry count does not match dimension");
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(static_cast<int>(rows.size())) {
  check_dim(n_);
  a_.reserve(static_cast<size_t>(n_) * n_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_)
      throw Error(ErrorKind::BadInput, "ragged initializer rows");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::diagonal(std::span<const double> d) {
  SquareMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
  return m;
}

void SquareMatrix::require_finite() const {
  for (double v : a_)
    if (!std::isfinite(v)) throw Error(ErrorKind::BadInput, "non-finite matrix entry");
}

SquareMatrix transpose(const SquareMatrix& m) {
  const int n = m.dim();
  SquareMatrix t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(j, i) = m(i, j);
  return t;
}

namespace {
void check_same_dim(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix dimensions differ");
}
}  // namespace

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  check_same_dim(a, b);
  SquareMatrix c = a;
  for (size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] += b.entries()[i];
  return c;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  check_same_dim(a, b);
  SquareMatrix c = a;
  for (size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] -= b.entries()[i];
  return c;
}

SquareMatrix operator*(double c, const SquareMatrix& m) {
  SquareMatrix r = m;
  for (double& v : r.entries()) v *= c;
  return r;
}

SquareMatrix direct_sum(const SquareMatrix& a, const SquareMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  SquareMatrix c(na + nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) c(i, j) = a(i, j);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) c(na + i, na + j) = b(i, j);
  return c;
}

SquareMatrix block(const SquareMatrix& m, int r0, int c0, int k) {
  if (k < 1 || r0 < 0 || c0 < 0 || r0 + k > m.dim() || c0 + k > m.dim())
    throw Error(ErrorKind::IndexOutOfRange, "block exceeds matrix bounds");
  SquareMatrix b(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b(i, j) = m(r0 + i, c0 + j);
  return b;
}

std::vector<double> diagonal_of(const SquareMatrix& m) {
  std::vector<double> d(m.dim());
  for (int i = 0; i < m.dim(); ++i) d[i] = m(i, i);
  return d;
}

double trace(const SquareMatrix& m) {
  double t = 0.0;
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

}  // namespace symplectica

#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "symplectica/errors.hpp"

namespace symplectica {

/// Dense real square matrix, row-major storage.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n);
  SquareMatrix(int n, std::vector<double> entries);
  SquareMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SquareMatrix identity(int n);
  static SquareMatrix zero(int n) { return SquareMatrix(n); }
  static SquareMatrix diagonal(std::span<const double> d);

  int dim() const { return n_; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  std::span<const double> entries() const { return a_; }
  std::span<double> entries() { return a_; }
  const double* data() const { return a_.data(); }
  double* data() { return a_.data(); }

  // Throws BadInput on NaN/Inf entries.
  void require_finite() const;

  bool operator==(const SquareMatrix& other) const = default;

 private:
  int n_;
  std::vector<double> a_;
};

SquareMatrix transpose(const SquareMatrix& m);
SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator*(double c, const SquareMatrix& m);

/// [[A, 0], [0, B]]
SquareMatrix direct_sum(const SquareMatrix& a, const SquareMatrix& b);

/// Copies rows [r0, r0+k) x cols [c0, c0+k) into a k x k matrix.
SquareMatrix block(const SquareMatrix& m, int r0, int c0, int k);

std::vector<double> diagonal_of(const SquareMatrix& m);
double trace(const SquareMatrix& m);

}  // namespace symplectica

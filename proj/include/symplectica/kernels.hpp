#pragma once

#include "symplectica/matrix.hpp"

// Dense kernels. The functions in symplectica:: run the same arithmetic as
// the serial reference in symplectica::serial:: and go OpenMP-parallel above
// a size threshold. Each output element keeps its accumulation order, so the
// two paths produce bit-identical results; tests and the bench target rely
// on that.

namespace symplectica {

namespace serial {
SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix matmul_tn(const SquareMatrix& a, const SquareMatrix& b);  // a^T b
SquareMatrix congruence(const SquareMatrix& m, const SquareMatrix& a);  // m^T a m
}  // namespace serial

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix matmul_tn(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix congruence(const SquareMatrix& m, const SquareMatrix& a);

std::vector<double> matvec(const SquareMatrix& a, std::span<const double> x);

double max_abs(const SquareMatrix& m);
double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b);
double frobenius_norm(const SquareMatrix& m);
double norm2(std::span<const double> v);
double dot(std::span<const double> x, std::span<const double> y);

// Rows below `threshold` stay serial; exposed so the bench can force both paths.
int parallel_threshold();

}  // namespace symplectica

#include "symplectica/spd.hpp"

#include <cmath>
#include <string>

#include "symplectica/kernels.hpp"

namespace symplectica {

namespace {

// Q f(lambda) Q^T
SquareMatrix spectral_map(const EigenDecomposition& eig, double (*f)(double)) {
  SquareMatrix qd = eig.vectors;
  const int n = qd.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) qd(i, j) *= f(eig.values[j]);
  return matmul(qd, transpose(eig.vectors));
}

}  // namespace

SpdMatrix SpdMatrix::validate(const SquareMatrix& s) {
  s.require_finite();
  if (!is_symmetric(s, kTolSym))
    throw Error(ErrorKind::NotSymmetric, "matrix exceeds symmetry tolerance");
  SquareMatrix sym = symmetrize(s);
  const EigenDecomposition eig = sym_eig(sym);
  const double lambda_min = eig.values.front();
  const double floor = kTolPd * trace(sym) / sym.dim();
  if (lambda_min <= floor)
    throw Error(ErrorKind::NotPositiveDefinite,
                "smallest eigenvalue " + std::to_string(lambda_min));
  return SpdMatrix(std::move(sym));
}

SpdMatrix SpdMatrix::trusted(const SquareMatrix& s) { return SpdMatrix(symmetrize(s)); }

SpdMatrix validate_spd(const SquareMatrix& s) { return SpdMatrix::validate(s); }

SpdMatrix spd_sqrt(const SpdMatrix& s) {
  const EigenDecomposition eig = sym_eig(s.matrix());
  return SpdMatrix::trusted(spectral_map(eig, [](double x) { return std::sqrt(x); }));
}

SpdMatrix spd_inv_sqrt(const SpdMatrix& s) {
  const EigenDecomposition eig = sym_eig(s.matrix());
  if (eig.values.front() < kTolCond * eig.values.back())
    throw Error(ErrorKind::IllConditioned,
                "condition number exceeds " + std::to_string(1.0 / kTolCond));
  return SpdMatrix::trusted(spectral_map(eig, [](double x) { return 1.0 / std::sqrt(x); }));
}

double condition_number(const SpdMatrix& s) {
  const EigenDecomposition eig = sym_eig(s.matrix());
  return eig.values.back() / eig.values.front();
}

SpdMatrix direct_sum(const SpdMatrix& a, const SpdMatrix& b) {
  return SpdMatrix::trusted(direct_sum(a.matrix(), b.matrix()));
}

}  // namespace symplectica

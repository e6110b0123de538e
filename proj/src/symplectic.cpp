#include "symplectica/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symplectica/kernels.hpp"

namespace symplectica {

namespace {

constexpr double kClusterGap = 1e-8;    // relative gap closing an eigenvalue cluster
constexpr double kPairingFloor = 1e-12;  // Gram-Schmidt breakdown threshold

int half_dim(const SquareMatrix& m) {
  if (m.dim() % 2 != 0)
    throw Error(ErrorKind::OddDimension, "dimension " + std::to_string(m.dim()));
  return m.dim() / 2;
}

std::vector<double> column(const SquareMatrix& m, int j) {
  std::vector<double> c(m.dim());
  for (int i = 0; i < m.dim(); ++i) c[i] = m(i, j);
  return c;
}

}  // namespace

SquareMatrix standard_j(int n) {
  if (n < 1) throw Error(ErrorKind::BadInput, "n must be >= 1");
  SquareMatrix j(2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return j;
}

SymplecticCheck is_symplectic(const SquareMatrix& m, double tol) {
  const int n = half_dim(m);
  const SquareMatrix j = standard_j(n);
  const double residual = max_abs_diff(congruence(m, j), j);
  return {residual <= tol, residual};
}

SymplecticMatrix SymplecticMatrix::validate(const SquareMatrix& m) {
  const SymplecticCheck check = is_symplectic(m, kTolSymp);
  if (!check.symplectic)
    throw Error(ErrorKind::NotSymplectic,
                "form residual " + std::to_string(check.residual));
  return SymplecticMatrix(m);
}

SquareMatrix symplectic_inverse(const SquareMatrix& m) {
  const SquareMatrix j = standard_j(half_dim(m));
  return -1.0 * matmul(j, matmul_tn(m, j));
}

SymplecticPair williamson_pair(const WilliamsonForm& wf, int k) {
  const int n = wf.m.dim() / 2;
  if (k < 0 || k >= n) throw Error(ErrorKind::IndexOutOfRange, "pair index " + std::to_string(k));
  return {column(wf.m.matrix(), k), column(wf.m.matrix(), n + k), wf.d[k]};
}

WilliamsonResiduals williamson_residuals(const SpdMatrix& a, const WilliamsonForm& wf) {
  const SquareMatrix d = SquareMatrix::diagonal(wf.d);
  const SquareMatrix dd = direct_sum(d, d);
  const double form = max_abs_diff(congruence(wf.m.matrix(), a.matrix()), dd);
  return {form, is_symplectic(wf.m.matrix(), kTolSymp).residual};
}

std::vector<double> symplectic_eigenvalues(const SpdMatrix& a) {
  const int n = half_dim(a.matrix());
  const SquareMatrix root = spd_sqrt(a).matrix();
  const SquareMatrix k = matmul(root, matmul(standard_j(n), root));
  const EigenDecomposition eig = sym_eig(symmetrize(matmul_tn(k, k)));
  std::vector<double> d(n);
  for (int j = 0; j < n; ++j)
    d[j] = std::sqrt((eig.values[2 * j] + eig.values[2 * j + 1]) / 2.0);
  return d;
}

// Williamson decomposition through the skew form K = A^{1/2} J A^{1/2}.
// K^T K = -K^2 is symmetric positive definite with each d_j^2 doubled. For a
// unit eigenvector v of K^T K, w := -Kv/||Kv|| completes an orthonormal pair
// with v^T K w = d, and [v_1..v_n w_1..w_n] maps back through A^{-1/2} to a
// symplectic basis diagonalizing A.
WilliamsonForm williamson(const SpdMatrix& a) {
  const int n = half_dim(a.matrix());
  const SquareMatrix root = spd_sqrt(a).matrix();
  const SquareMatrix inv_root = spd_inv_sqrt(a).matrix();
  const SquareMatrix k = matmul(root, matmul(standard_j(n), root));
  const EigenDecomposition eig = sym_eig(symmetrize(matmul_tn(k, k)));
  const std::vector<double>& s = eig.values;

  struct Pair {
    std::vector<double> v, w;
    double d;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n);

  auto project_out = [](std::vector<double>& r, const std::vector<double>& b) {
    const double proj = dot(r, b);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= proj * b[i];
  };

  std::vector<std::vector<double>> basis;  // accumulated v's and w's per cluster
  size_t cluster_begin = 0;
  for (size_t end = 0; end < s.size(); ++end) {
    const bool last = end + 1 == s.size();
    if (!last && s[end + 1] - s[end] < kClusterGap * s[end + 1]) continue;

    // Pair off the cluster [cluster_begin, end].
    basis.clear();
    const size_t cluster_size = end - cluster_begin + 1;
    size_t built = 0;
    for (size_t c = cluster_begin; c <= end && 2 * built < cluster_size; ++c) {
      std::vector<double> v = column(eig.vectors, static_cast<int>(c));
      for (const auto& b : basis) project_out(v, b);
      const double vn = norm2(v);
      if (vn < kPairingFloor) continue;  // already spanned by built pairs
      for (double& x : v) x /= vn;

      std::vector<double> w = matvec(k, v);
      const double d = norm2(w);
      for (double& x : w) x /= -d;
      project_out(w, v);
      for (const auto& b : basis) project_out(w, b);
      const double wn = norm2(w);
      if (wn < kPairingFloor)
        throw Error(ErrorKind::DegeneratePairing,
                    "skew pairing collapsed inside eigenvalue cluster");
      for (double& x : w) x /= wn;

      basis.push_back(v);
      basis.push_back(w);
      pairs.push_back({std::move(v), std::move(w), d});
      ++built;
    }
    if (2 * built != cluster_size)
      throw Error(ErrorKind::DegeneratePairing,
                  "eigenvalue cluster of size " + std::to_string(cluster_size) +
                      " yielded " + std::to_string(built) + " pairs");
    cluster_begin = end + 1;
  }

  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& p, const Pair& q) { return p.d < q.d; });

  // M = A^{-1/2} [v-block w-block] (D^{1/2} (+) D^{1/2}), columns [x_1..x_n y_1..y_n].
  SquareMatrix paired(2 * n);
  std::vector<double> d(n);
  for (int j = 0; j < n; ++j) {
    const double scale = std::sqrt(pairs[j].d);
    for (int i = 0; i < 2 * n; ++i) {
      paired(i, j) = pairs[j].v[i] * scale;
      paired(i, n + j) = pairs[j].w[i] * scale;
    }
    d[j] = pairs[j].d;
  }
  return {SymplecticMatrix::validate(matmul(inv_root, paired)), std::move(d)};
}

WilliamsonForm block_diag_williamson(const SpdMatrix& e, const SpdMatrix& g) {
  const int n = e.dim();
  if (g.dim() != n)
    throw Error(ErrorKind::DimensionMismatch, "blocks have different dimensions");
  const SquareMatrix g_root = spd_sqrt(g).matrix();
  const SquareMatrix g_inv_root = spd_inv_sqrt(g).matrix();
  const EigenDecomposition eig =
      sym_eig(symmetrize(matmul(g_root, matmul(e.matrix(), g_root))));

  SquareMatrix m(2 * n);
  std::vector<double> d(n);
  for (int j = 0; j < n; ++j) {
    d[j] = std::sqrt(eig.values[j]);
    const std::vector<double> v = column(eig.vectors, j);
    std::vector<double> u = matvec(g_inv_root, v);
    const double scale = std::sqrt(d[j]);
    for (double& x : u) x *= scale;
    const std::vector<double> gu = matvec(g.matrix(), u);
    for (int i = 0; i < n; ++i) {
      m(n + i, j) = u[i];             // x_j = (0, u_j)
      m(i, n + j) = -gu[i] / d[j];    // y_j = (-d_j^{-1} G u_j, 0)
    }
  }
  return {SymplecticMatrix::validate(m), std::move(d)};
}

std::vector<double> diagonal_symplectic_spectrum(std::span<const double> eta,
                                                 std::span<const double> gamma,
                                                 std::span<const double> beta) {
  const size_t n = eta.size();
  if (gamma.size() != n || beta.size() != n)
    throw Error(ErrorKind::LengthMismatch, "diagonal vectors have different lengths");
  std::vector<double> d(n);
  for (size_t j = 0; j < n; ++j) {
    const double det = eta[j] * gamma[j] - beta[j] * beta[j];
    if (det <= 0.0)
      throw Error(ErrorKind::NotPositiveDefinite,
                  "eta_j gamma_j - beta_j^2 = " + std::to_string(det) + " at j = " +
                      std::to_string(j));
    d[j] = std::sqrt(det);
  }
  std::sort(d.begin(), d.end());
  return d;
}

PartialTraceIdentity partial_trace_identity(const SpdMatrix& a, const WilliamsonForm& wf,
                                            int k) {
  const int n = half_dim(a.matrix());
  if (wf.m.dim() != 2 * n)
    throw Error(ErrorKind::DimensionMismatch, "form and matrix dimensions differ");
  if (k < 1 || k > n) throw Error(ErrorKind::IndexOutOfRange, "k = " + std::to_string(k));

  const SquareMatrix eg =
      direct_sum(block(a.matrix(), 0, 0, n), block(a.matrix(), n, n, n));
  const SquareMatrix j2n = standard_j(n);

  std::vector<std::vector<double>> w_cols;
  w_cols.reserve(2 * k);
  for (int c = 0; c < k; ++c) w_cols.push_back(column(wf.m.matrix(), c));
  for (int c = 0; c < k; ++c) w_cols.push_back(column(wf.m.matrix(), n + c));

  double lhs = 0.0, rhs = 0.0;
  for (const auto& col : w_cols) {
    lhs += dot(col, matvec(eg, col));
    rhs += dot(col, matvec(a.matrix(), col));
  }

  const SquareMatrix j2k = standard_j(k);
  double j_residual = 0.0;
  std::vector<std::vector<double>> j_cols;
  j_cols.reserve(2 * k);
  for (const auto& col : w_cols) j_cols.push_back(matvec(j2n, col));
  for (int i = 0; i < 2 * k; ++i)
    for (int j = 0; j < 2 * k; ++j)
      j_residual = std::max(j_residual, std::fabs(dot(w_cols[i], j_cols[j]) - j2k(i, j)));

  return {lhs, rhs, j_residual};
}

}  // namespace symplectica

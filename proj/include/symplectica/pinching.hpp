#pragma once

#include "symplectica/spd.hpp"

namespace symplectica {

/// Ordered block sizes summing to the pinched dimension.
class Partition {
 public:
  explicit Partition(std::vector<int> sizes);
  static Partition parse(const std::string& csv);  // "1,3" -> {1,3}

  const std::vector<int>& sizes() const { return sizes_; }
  int total() const { return total_; }
  std::string to_string() const;

  /// {p, p}: partition of a doubled dimension, block structure repeated.
  Partition doubled() const;

 private:
  std::vector<int> sizes_;
  int total_;
};

/// 2n x 2n SPD matrix A = [[E, F], [F^T, G]] with its n x n blocks.
class BlockedSpd {
 public:
  explicit BlockedSpd(SpdMatrix a);  // throws OddDimension

  const SpdMatrix& a() const { return a_; }
  const SpdMatrix& e() const { return e_; }
  const SpdMatrix& g() const { return g_; }
  const SquareMatrix& f() const { return f_; }
  int block_dim() const { return e_.dim(); }

 private:
  SpdMatrix a_;
  SpdMatrix e_, g_;
  SquareMatrix f_;
};

/// Zeroes every entry outside the diagonal blocks of p. Throws PartitionMismatch.
SquareMatrix pinch(const SquareMatrix& h, const Partition& p);

/// [[C(E), C(F)], [C(F^T), C(G)]]; validated SPD on return.
SpdMatrix s_pinch(const BlockedSpd& ab, const Partition& p);

/// Diagonal in matrix order, unsorted.
std::vector<double> delta(const SquareMatrix& h);

/// [sqrt(eta_1 gamma_1), ..., sqrt(eta_n gamma_n)], matrix order.
std::vector<double> delta_s(const BlockedSpd& ab);

}  // namespace symplectica

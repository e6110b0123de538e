#include "symplectica/pinching.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace symplectica {

Partition::Partition(std::vector<int> sizes) : sizes_(std::move(sizes)), total_(0) {
  if (sizes_.empty()) throw Error(ErrorKind::BadInput, "empty partition");
  for (int s : sizes_) {
    if (s < 1) throw Error(ErrorKind::BadInput, "partition blocks must be >= 1");
    total_ += s;
  }
}

Partition Partition::parse(const std::string& csv) {
  std::vector<int> sizes;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadInput, "partition entry '" + tok + "' is not an integer");
    }
    if (pos != tok.size())
      throw Error(ErrorKind::BadInput, "partition entry '" + tok + "' is not an integer");
    sizes.push_back(v);
  }
  return Partition(std::move(sizes));
}

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < sizes_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(sizes_[i]);
  }
  return s;
}

Partition Partition::doubled() const {
  std::vector<int> sizes = sizes_;
  sizes.insert(sizes.end(), sizes_.begin(), sizes_.end());
  return Partition(std::move(sizes));
}

BlockedSpd::BlockedSpd(SpdMatrix a)
    : a_(std::move(a)),
      e_(SpdMatrix::trusted(SquareMatrix(1))),
      g_(SpdMatrix::trusted(SquareMatrix(1))),
      f_(SquareMatrix(1)) {
  if (a_.dim() % 2 != 0)
    throw Error(ErrorKind::OddDimension, "blocked matrix needs even dimension");
  const int n = a_.dim() / 2;
  // Principal blocks of an SPD matrix are SPD.
  e_ = SpdMatrix::trusted(block(a_.matrix(), 0, 0, n));
  g_ = SpdMatrix::trusted(block(a_.matrix(), n, n, n));
  f_ = block(a_.matrix(), 0, n, n);
}

SquareMatrix pinch(const SquareMatrix& h, const Partition& p) {
  if (p.total() != h.dim())
    throw Error(ErrorKind::PartitionMismatch,
                "partition sums to " + std::to_string(p.total()) + ", matrix dimension is " +
                    std::to_string(h.dim()));
  SquareMatrix c(h.dim());
  int offset = 0;
  for (int size : p.sizes()) {
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) c(offset + i, offset + j) = h(offset + i, offset + j);
    offset += size;
  }
  return c;
}

SpdMatrix s_pinch(const BlockedSpd& ab, const Partition& p) {
  const int n = ab.block_dim();
  if (p.total() != n)
    throw Error(ErrorKind::PartitionMismatch,
                "partition sums to " + std::to_string(p.total()) + ", block dimension is " +
                    std::to_string(n));
  const SquareMatrix ce = pinch(ab.e().matrix(), p);
  const SquareMatrix cg = pinch(ab.g().matrix(), p);
  const SquareMatrix cf = pinch(ab.f(), p);
  SquareMatrix out(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = ce(i, j);
      out(i, n + j) = cf(i, j);
      out(n + i, j) = cf(j, i);
      out(n + i, n + j) = cg(i, j);
    }
  }
  // Holds mathematically; validation guards block-extraction bugs upstream.
  return SpdMatrix::validate(out);
}

std::vector<double> delta(const SquareMatrix& h) { return diagonal_of(h); }

std::vector<double> delta_s(const BlockedSpd& ab) {
  const int n = ab.block_dim();
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = std::sqrt(ab.e()(i, i) * ab.g()(i, i));
  return d;
}

}  // namespace symplectica

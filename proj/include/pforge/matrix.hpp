#pragma once

#include "pforge/ring.hpp"

#include <string>
#include <vector>

namespace pforge {

using Vec = std::vector<Int>;

// Dense matrix over Z/p^k with entries kept reduced to [0, p^k).
// Degenerate 0 x n / n x 0 shapes are legal and behave as empty products.
class ZpkMatrix {
 public:
  ZpkMatrix() : rows_(0), cols_(0) {}

  ZpkMatrix(RingSpec ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, Int(0)) {
    if (rows < 0 || cols < 0) throw input_error("ZpkMatrix: negative dimension");
  }

  ZpkMatrix(RingSpec ring, const std::vector<std::vector<Int>>& grid, int cols_hint = -1)
      : ring_(std::move(ring)), rows_(static_cast<int>(grid.size())) {
    cols_ = grid.empty() ? (cols_hint < 0 ? 0 : cols_hint)
                         : static_cast<int>(grid.front().size());
    a_.assign(static_cast<size_t>(rows_) * cols_, Int(0));
    for (int i = 0; i < rows_; ++i) {
      if (static_cast<int>(grid[i].size()) != cols_)
        throw input_error("ZpkMatrix: ragged rows");
      for (int j = 0; j < cols_; ++j) at(i, j) = ring_.reduce(grid[i][j]);
    }
  }

  static ZpkMatrix identity(const RingSpec& ring, int n) {
    ZpkMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  const RingSpec& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }

  void set_row(int i, const Vec& v) {
    for (int j = 0; j < cols_; ++j) at(i, j) = ring_.reduce(v[j]);
  }

  ZpkMatrix operator*(const ZpkMatrix& o) const {
    if (cols_ != o.rows_ || ring_ != o.ring_)
      throw input_error("ZpkMatrix: incompatible product");
    ZpkMatrix r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int l = 0; l < cols_; ++l) {
        const Int& x = at(i, l);
        if (x == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          Int& t = r.at(i, j);
          t = ring_.reduce(t + x * o.at(l, j));
        }
      }
    return r;
  }

  ZpkMatrix operator+(const ZpkMatrix& o) const {
    require_same_shape(o);
    ZpkMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.reduce(a_[i] + o.a_[i]);
    return r;
  }

  ZpkMatrix operator-(const ZpkMatrix& o) const {
    require_same_shape(o);
    ZpkMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.reduce(a_[i] - o.a_[i]);
    return r;
  }

  ZpkMatrix scaled(const Int& c) const {
    ZpkMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.reduce(c * a_[i]);
    return r;
  }

  ZpkMatrix transpose() const {
    ZpkMatrix r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Entrywise reduction into Z/p^j, j <= k.
  ZpkMatrix mod_reduced(int j) const {
    RingSpec target = ring_.truncated(j);
    ZpkMatrix r(target, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int c = 0; c < cols_; ++c) r.at(i, c) = target.reduce(at(i, c));
    return r;
  }

  // Same residues construed in Z/p^{k'}, k' >= k (canonical entrywise preimage).
  ZpkMatrix canonical_lift(int k_target) const {
    if (k_target < ring_.k) throw input_error("canonical_lift: target below current precision");
    RingSpec target(ring_.p, k_target);
    ZpkMatrix r(target, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int c = 0; c < cols_; ++c) r.at(i, c) = at(i, c);
    return r;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != Int(i == j ? 1 : 0)) return false;
    return true;
  }

  bool is_zero() const {
    for (const Int& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const ZpkMatrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const ZpkMatrix& o) const { return !(*this == o); }

  // Canonical string key (for dedup maps); entries are already reduced.
  std::string key() const {
    std::string s;
    s.reserve(a_.size() * 3);
    for (const Int& x : a_) {
      s += x.str();
      s += ',';
    }
    return s;
  }

  // Minimum valuation over entries (k for the zero matrix).
  int min_valuation() const {
    int v = ring_.k;
    for (const Int& x : a_) v = std::min(v, ring_.valuation(x));
    return v;
  }

 private:
  void require_same_shape(const ZpkMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_)
      throw input_error("ZpkMatrix: shape/ring mismatch");
  }

  RingSpec ring_;
  int rows_, cols_;
  std::vector<Int> a_;
};

// x . A for a row vector x (the module convention used throughout).
inline Vec vec_mul_mat(const RingSpec& ring, const Vec& x, const ZpkMatrix& a) {
  if (static_cast<int>(x.size()) != a.rows())
    throw input_error("vec_mul_mat: dimension mismatch");
  Vec r(a.cols(), Int(0));
  for (int i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < a.cols(); ++j) r[j] = ring.reduce(r[j] + x[i] * a.at(i, j));
  }
  return r;
}

// A . x for a column vector x.
inline Vec mat_mul_vec(const RingSpec& ring, const ZpkMatrix& a, const Vec& x) {
  if (static_cast<int>(x.size()) != a.cols())
    throw input_error("mat_mul_vec: dimension mismatch");
  Vec r(a.rows(), Int(0));
  for (int i = 0; i < a.rows(); ++i) {
    Int acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a.at(i, j) * x[j];
    r[i] = ring.reduce(acc);
  }
  return r;
}

inline Vec vec_add(const RingSpec& ring, const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = ring.reduce(x[i] + y[i]);
  return r;
}

inline Vec vec_sub(const RingSpec& ring, const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = ring.reduce(x[i] - y[i]);
  return r;
}

inline Vec vec_scaled(const RingSpec& ring, const Int& c, const Vec& x) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = ring.reduce(c * x[i]);
  return r;
}

inline bool vec_is_zero(const Vec& x) {
  for (const Int& v : x)
    if (v != 0) return false;
  return true;
}

}  // namespace pforge

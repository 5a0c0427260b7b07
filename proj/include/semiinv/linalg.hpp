#ifndef SEMIINV_LINALG_HPP
#define SEMIINV_LINALG_HPP

#include <vector>

#include "semiinv/cyclotomic.hpp"

namespace semiinv {

// Dense matrix over Q(zeta_m).  Sizes here are tiny (group dimension) or
// moderate (graded pieces); plain Gaussian elimination with exact division
// is all we need.
struct CMatrix {
  int rows = 0;
  int cols = 0;
  int m = 1;  // conductor
  std::vector<CycNum> a;

  CMatrix() = default;
  CMatrix(int r, int c, int conductor)
      : rows(r), cols(c), m(conductor),
        a(static_cast<std::size_t>(r) * c, CycNum::zero(conductor)) {}

  static CMatrix identity(int n, int conductor) {
    CMatrix I(n, n, conductor);
    for (int i = 0; i < n; ++i) I.at(i, i) = CycNum::one(conductor);
    return I;
  }

  const CycNum& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  CycNum& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }

  friend bool operator==(const CMatrix& x, const CMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.m == y.m && x.a == y.a;
  }
  friend bool operator!=(const CMatrix& x, const CMatrix& y) { return !(x == y); }

  friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.cols != y.rows || x.m != y.m) throw input_error("matrix product shape mismatch");
    CMatrix r(x.rows, y.cols, x.m);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const CycNum& xik = x.at(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < y.cols; ++j) {
          const CycNum& ykj = y.at(k, j);
          if (!ykj.is_zero()) r.at(i, j) += xik * ykj;
        }
      }
    return r;
  }

  CMatrix conj_transpose() const {
    CMatrix r(cols, rows, m);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j).conjugate();
    return r;
  }

  CMatrix transpose() const {
    CMatrix r(cols, rows, m);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
      }
    return true;
  }

  std::string key() const {
    std::string s;
    for (const CycNum& x : a) {
      s += x.key();
      s += ';';
    }
    return s;
  }
};

namespace detail {

// Row-reduce in place; returns pivot columns.  Eliminates above and below.
inline std::vector<int> rref(CMatrix& mt) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < mt.cols && row < mt.rows; ++col) {
    int piv = -1;
    for (int i = row; i < mt.rows; ++i)
      if (!mt.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < mt.cols; ++j) std::swap(mt.at(piv, j), mt.at(row, j));
    CycNum inv = mt.at(row, col).inverse();
    for (int j = col; j < mt.cols; ++j)
      if (!mt.at(row, j).is_zero()) mt.at(row, j) *= inv;
    for (int i = 0; i < mt.rows; ++i) {
      if (i == row || mt.at(i, col).is_zero()) continue;
      CycNum f = mt.at(i, col);
      for (int j = col; j < mt.cols; ++j) {
        if (mt.at(row, j).is_zero()) continue;
        mt.at(i, j) -= f * mt.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

inline int rank(CMatrix mt) { return static_cast<int>(detail::rref(mt).size()); }

inline CycNum det(CMatrix mt) {
  if (mt.rows != mt.cols) throw input_error("determinant of non-square matrix");
  CycNum d = CycNum::one(mt.m);
  for (int col = 0; col < mt.cols; ++col) {
    int piv = -1;
    for (int i = col; i < mt.rows; ++i)
      if (!mt.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) return CycNum::zero(mt.m);
    if (piv != col) {
      for (int j = 0; j < mt.cols; ++j) std::swap(mt.at(piv, j), mt.at(col, j));
      d = -d;
    }
    d *= mt.at(col, col);
    CycNum inv = mt.at(col, col).inverse();
    for (int i = col + 1; i < mt.rows; ++i) {
      if (mt.at(i, col).is_zero()) continue;
      CycNum f = mt.at(i, col) * inv;
      for (int j = col; j < mt.cols; ++j)
        if (!mt.at(col, j).is_zero()) mt.at(i, j) -= f * mt.at(col, j);
    }
  }
  return d;
}

inline CMatrix inverse(const CMatrix& mt) {
  if (mt.rows != mt.cols) throw input_error("inverse of non-square matrix");
  int n = mt.rows;
  CMatrix aug(n, 2 * n, mt.m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = mt.at(i, j);
    aug.at(i, n + i) = CycNum::one(mt.m);
  }
  auto pivots = detail::rref(aug);
  if (static_cast<int>(pivots.size()) != n) throw math_error("matrix is singular");
  CMatrix r(n, n, mt.m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

// Basis of the right kernel {v : M v = 0}, canonical (rref-based).
inline std::vector<std::vector<CycNum>> kernel_basis(CMatrix mt) {
  auto pivots = detail::rref(mt);
  std::vector<bool> is_pivot(mt.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<CycNum>> basis;
  for (int freec = 0; freec < mt.cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<CycNum> v(mt.cols, CycNum::zero(mt.m));
    v[freec] = CycNum::one(mt.m);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -mt.at(static_cast<int>(r), freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental echelon accumulator for linear spans of long coordinate
// vectors.  Rows are kept reduced; insertion order determines pivots, so
// the result is deterministic.
class EchelonSpan {
 public:
  explicit EchelonSpan(int conductor) : m_(conductor) {}

  // Reduces v against the current span in place; returns the index of the
  // new pivot if v was independent (and then absorbs it), or -1.
  int add(std::vector<CycNum> v) {
    reduce(v);
    int p = first_nonzero(v);
    if (p < 0) return -1;
    CycNum inv = v[p].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    // keep existing rows reduced against the new one
    for (auto& [q, row] : rows_) {
      const CycNum& f = row[p];
      if (f.is_zero()) continue;
      CycNum fc = f;
      axpy(row, v, -fc);
    }
    rows_.emplace(p, std::move(v));
    return p;
  }

  bool contains(std::vector<CycNum> v) const {
    reduce(v);
    return first_nonzero(v) < 0;
  }

  void reduce(std::vector<CycNum>& v) const {
    for (const auto& [p, row] : rows_) {
      const CycNum& f = v[p];
      if (f.is_zero()) continue;
      CycNum fc = f;
      axpy(v, row, -fc);
    }
  }

  int dim() const { return static_cast<int>(rows_.size()); }

  // The reduced normalized rows in ascending pivot order; this is the
  // reduced echelon basis of the span, unique whatever the insertion order.
  std::vector<std::vector<CycNum>> rows() const {
    std::vector<std::vector<CycNum>> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
  }

 private:
  static int first_nonzero(const std::vector<CycNum>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
  }
  static void axpy(std::vector<CycNum>& dst, const std::vector<CycNum>& src, const CycNum& c) {
    for (std::size_t i = 0; i < dst.size(); ++i)
      if (!src[i].is_zero()) dst[i] += c * src[i];
  }

  int m_;
  std::map<int, std::vector<CycNum>> rows_;  // pivot index -> normalized row
};

}  // namespace semiinv

#endif

#pragma once

#include <cassert>
#include <cmath>
#include <vector>

#include "ancrc/types.hpp"

namespace ancrc {

using CVec = std::vector<Cplx>;

// Dense complex matrix, row-major. Sizes here are (n+1)x(n+1) with n <= 6,
// so no effort is spent on anything beyond partial-pivot elimination.
class CMat {
 public:
  CMat() = default;
  CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static CMat identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cplx& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const Cplx& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  CMat operator*(const CMat& o) const {
    assert(cols_ == o.rows_);
    CMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        Cplx aik = (*this)(i, k);
        if (aik == Cplx(0.0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }
  CVec operator*(const CVec& v) const {
    assert(cols_ == static_cast<int>(v.size()));
    CVec r(rows_, Cplx(0.0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }
  CMat operator-(const CMat& o) const {
    CMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  CMat operator+(const CMat& o) const {
    CMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  CMat operator*(Cplx s) const {
    CMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
  }
  CMat transpose() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const Cplx& x : a_) m = std::max(m, std::abs(x));
    return m;
  }

  // Gauss-Jordan with partial pivoting.
  CMat inverse() const {
    assert(rows_ == cols_);
    int n = rows_;
    CMat a = *this;
    CMat inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = col;
      for (int r = col + 1; r < n; ++r)
        if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
      if (std::abs(a(piv, col)) < 1e-300)
        throw GeometryError("singular matrix in inverse()");
      if (piv != col)
        for (int j = 0; j < n; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      Cplx d = a(col, col);
      for (int j = 0; j < n; ++j) {
        a(col, j) /= d;
        inv(col, j) /= d;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        Cplx f = a(r, col);
        if (f == Cplx(0.0)) continue;
        for (int j = 0; j < n; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Cplx> a_;
};

inline double max_abs_diff(const CMat& a, const CMat& b) {
  return (a - b).max_abs();
}

}  // namespace ancrc

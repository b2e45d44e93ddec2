#pragma once

// Dense exact matrices over Int (= mpz) or Rat (= mpq).  Everything the
// library needs fits in a plain row-major container: the lattices at play
// have rank <= 23, so asymptotics are irrelevant and exactness is the point.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "enrlat/errors.hpp"
#include "enrlat/numeric.hpp"

namespace enrlat {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix literal");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Lexicographic order on (rows, cols, entries); used as a set key.
  bool operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (data_[k] != o.data_[k]) return data_[k] < o.data_[k];
    return false;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw InputError("matrix-vector shape mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& v : r.data_) v = -v;
    return r;
  }
  Matrix operator*(const T& s) const {
    Matrix r = *this;
    for (auto& v : r.data_) v *= s;
    return r;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? T(1) : T(0))) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_column(std::size_t j, const std::vector<T>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row a += f * row b
  void add_row(std::size_t a, std::size_t b, const T& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += f * (*this)(b, j);
  }
  /// col a += f * col b
  void add_col(std::size_t a, std::size_t b, const T& f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += f * (*this)(i, b);
  }
  void scale_row(std::size_t a, const T& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) *= f;
  }
  void scale_col(std::size_t a, const T& f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) *= f;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += enrlat::to_string((*this)(i, j));
      }
    }
    return s + "]";
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

/// Fails with IntegralityFailure if any entry has a denominator.
inline IntMat to_int(const RatMat& m, const char* what = "matrix") {
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (den(m(i, j)) != 1)
        throw IntegralityFailure(std::string(what) + " is not integral");
      r(i, j) = num(m(i, j));
    }
  return r;
}

inline IntMat hstack(const IntMat& a, const IntMat& b) {
  IntMat r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

inline RatMat hstack(const RatMat& a, const RatMat& b) {
  RatMat r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

template <typename T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

/// Determinant by fraction-free Bareiss elimination.
inline Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw InputError("det of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = t / prev;  // exact division (Bareiss)
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Row echelon form over Q, in place; returns pivot column indices.
inline std::vector<std::size_t> row_reduce(RatMat& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    Rat inv = Rat(1) / a(r, c);
    a.scale_row(r, inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && a(i, c) != 0) a.add_row(i, r, -a(i, c));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(const RatMat& m) {
  RatMat a = m;
  return row_reduce(a).size();
}

inline std::size_t rank(const IntMat& m) { return rank(to_rat(m)); }

/// Basis of the rational kernel {x : m x = 0}, as columns.
inline RatMat kernel(const RatMat& m) {
  RatMat a = m;
  std::vector<std::size_t> pivots = row_reduce(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t k = m.cols() - pivots.size();
  RatMat ker(m.cols(), k);
  std::size_t col = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ker(free, col) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      ker(pivots[r], col) = -a(r, free);
    ++col;
  }
  return ker;
}

/// Solve m x = b over Q; throws InputError when inconsistent.
inline RatVec solve(const RatMat& m, const RatVec& b) {
  RatMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols())
    throw InputError("inconsistent linear system");
  RatVec x(m.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

inline RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
  std::size_t n = m.rows();
  RatMat aug = hstack(m, RatMat::identity(n));
  std::vector<std::size_t> pivots = row_reduce(aug);
  if (pivots.size() != n) throw InputError("matrix is singular");
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Smallest common denominator multiple that clears the matrix to integers.
inline Int denominator_lcm(const RatMat& m) {
  Int l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, den(m(i, j)));
  return l;
}

inline IntMat clear_denominators(const RatMat& m) {
  Int l = denominator_lcm(m);
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j) * Rat(l);
      r(i, j) = num(v);
    }
  return r;
}

inline Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

}  // namespace enrlat

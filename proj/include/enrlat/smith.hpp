#pragma once

// Smith normal form over Z with both transformation matrices.  Substrate for
// discriminant groups, saturation and integer kernels.

#include <cstddef>

#include "enrlat/matrix.hpp"

namespace enrlat {

struct SmithResult {
  IntMat S;  ///< diagonal, s1 | s2 | ..., non-negative
  IntMat P;  ///< unimodular row transform
  IntMat Q;  ///< unimodular column transform; S = P * A * Q
  std::size_t rank = 0;  ///< number of nonzero diagonal entries
};

namespace detail {

inline bool smith_find_pivot(const IntMat& s, std::size_t k, std::size_t* pi,
                             std::size_t* pj) {
  bool found = false;
  Int best;
  for (std::size_t i = k; i < s.rows(); ++i)
    for (std::size_t j = k; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Int a = abs(s(i, j));
      if (!found || a < best) {
        best = a;
        *pi = i;
        *pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace detail

inline SmithResult smith_normal_form(const IntMat& a) {
  SmithResult res;
  res.S = a;
  res.P = IntMat::identity(a.rows());
  res.Q = IntMat::identity(a.cols());
  IntMat& s = res.S;
  std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pi = k, pj = k;
    if (!detail::smith_find_pivot(s, k, &pi, &pj)) break;
    s.swap_rows(k, pi);
    res.P.swap_rows(k, pi);
    s.swap_cols(k, pj);
    res.Q.swap_cols(k, pj);

    // Clear row and column k; restart after every remainder improvement so
    // the pivot shrinks monotonically.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = k + 1; i < s.rows(); ++i) {
        if (s(i, k) == 0) continue;
        Int q = fdiv(s(i, k), s(k, k));
        s.add_row(i, k, -q);
        res.P.add_row(i, k, -q);
        if (s(i, k) != 0) {  // remainder becomes the new, smaller pivot
          s.swap_rows(k, i);
          res.P.swap_rows(k, i);
          dirty = true;
        }
      }
      for (std::size_t j = k + 1; j < s.cols(); ++j) {
        if (s(k, j) == 0) continue;
        Int q = fdiv(s(k, j), s(k, k));
        s.add_col(j, k, -q);
        res.Q.add_col(j, k, -q);
        if (s(k, j) != 0) {
          s.swap_cols(k, j);
          res.Q.swap_cols(k, j);
          dirty = true;
        }
      }
    }

    // Enforce divisibility s_k | s(i, j) for the remaining block.
    for (std::size_t i = k + 1; i < s.rows(); ++i)
      for (std::size_t j = k + 1; j < s.cols(); ++j) {
        if (s(i, j) % s(k, k) != 0) {
          // Fold row i into row k and redo this k.
          s.add_row(k, i, Int(1));
          res.P.add_row(k, i, Int(1));
          --k;
          i = s.rows();
          break;
        }
      }
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (s(k, k) < 0) {
      s.scale_row(k, Int(-1));
      res.P.scale_row(k, Int(-1));
    }
    if (s(k, k) != 0) ++res.rank;
  }
  return res;
}

/// Invariant factors of A, in divisibility order, including entries equal 1.
inline IntVec invariant_factors(const IntMat& a) {
  SmithResult r = smith_normal_form(a);
  IntVec f;
  for (std::size_t k = 0; k < r.rank; ++k) f.push_back(r.S(k, k));
  return f;
}

/// Basis of the integer kernel {x in Z^cols : A x = 0}, as columns.
/// The result is a saturated subgroup basis (the kernel of an integer matrix
/// is its own saturation).
inline IntMat integer_kernel(const IntMat& a) {
  SmithResult r = smith_normal_form(a);
  std::size_t k = a.cols() - r.rank;
  IntMat ker(a.cols(), k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < a.cols(); ++i)
      ker(i, j) = r.Q(i, r.rank + j);
  return ker;
}

}  // namespace enrlat

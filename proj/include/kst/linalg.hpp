#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "kst/rational.hpp"

namespace kst {

// Dense exact linear algebra over any field type F with +,-,*,/ and is_zero().
template <class F>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<F> a;
  Mat() = default;
  Mat(int r, int c, const F& zero) : rows(r), cols(c), a(r * c, zero) {}
  F& operator()(int r, int c) { return a[r * cols + c]; }
  const F& operator()(int r, int c) const { return a[r * cols + c]; }
};

template <class F>
bool fzero(const F& x) {
  return x.is_zero();
}

inline bool fzero(const Rat& x) { return sgn(x) == 0; }

// Solve A x = b by Gaussian elimination. A may be rectangular; the system must
// be consistent and have full column rank for a unique solution.
template <class F>
std::optional<std::vector<F>> solve_linear(Mat<F> A, std::vector<F> b, const F& zero) {
  assert((int)b.size() == A.rows);
  int n = A.rows, m = A.cols;
  std::vector<int> pivot_row(m, -1);
  int prow = 0;
  for (int c = 0; c < m && prow < n; ++c) {
    int p = -1;
    for (int r = prow; r < n; ++r)
      if (!fzero(A(r, c))) {
        p = r;
        break;
      }
    if (p < 0) continue;
    for (int cc = 0; cc < m; ++cc) std::swap(A(p, cc), A(prow, cc));
    std::swap(b[p], b[prow]);
    F inv = A(prow, c);
    for (int r = 0; r < n; ++r) {
      if (r == prow || fzero(A(r, c))) continue;
      F f = A(r, c) / inv;
      for (int cc = c; cc < m; ++cc) A(r, cc) = A(r, cc) - f * A(prow, cc);
      b[r] = b[r] - f * b[prow];
    }
    pivot_row[c] = prow;
    ++prow;
  }
  std::vector<F> x(m, zero);
  for (int c = 0; c < m; ++c) {
    if (pivot_row[c] < 0) return std::nullopt;  // rank-deficient
    x[c] = b[pivot_row[c]] / A(pivot_row[c], c);
  }
  // consistency of the remaining rows
  for (int r = 0; r < n; ++r) {
    F acc = zero;
    for (int c = 0; c < m; ++c) acc = acc + A(r, c) * x[c];
    F diff = acc - b[r];
    if (!fzero(diff)) return std::nullopt;
  }
  return x;
}

// Fraction-free Gaussian elimination (Bareiss) for an n x n system with
// entries in an integral domain supporting exact division via divide_exact.
// Returns (x_num[i], denom) with x_i = x_num[i] / denom.
template <class P>
std::optional<std::pair<std::vector<P>, P>> solve_bareiss(Mat<P> A, std::vector<P> b,
                                                          const P& one) {
  int n = A.rows;
  assert(A.cols == n && (int)b.size() == n);
  P prev = one;
  std::vector<int> rowperm(n);
  for (int i = 0; i < n; ++i) rowperm[i] = i;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int r = k; r < n; ++r)
      if (!A(r, k).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt;
    if (p != k) {
      for (int c = 0; c < n; ++c) std::swap(A(p, c), A(k, c));
      std::swap(b[p], b[k]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        P v = A(k, k) * A(r, c) - A(r, k) * A(k, c);
        auto q = v.divide_exact(prev);
        if (!q) return std::nullopt;
        A(r, c) = *q;
      }
      P v = A(k, k) * b[r] - A(r, k) * b[k];
      auto q = v.divide_exact(prev);
      if (!q) return std::nullopt;
      b[r] = *q;
      A(r, k) = P(A(k, k).nvars());
    }
    prev = A(k, k);
  }
  // back substitution: det = A(n-1,n-1); x_i * det solved bottom-up
  P det = A(n - 1, n - 1);
  std::vector<P> x(n, P(det.nvars()));
  for (int i = n - 1; i >= 0; --i) {
    P acc = b[i] * det;
    for (int j = i + 1; j < n; ++j) acc = acc - A(i, j) * x[j];
    auto q = acc.divide_exact(A(i, i));
    if (!q) return std::nullopt;
    x[i] = *q;
  }
  (void)sign;
  return std::make_pair(x, det);
}

template <class F>
std::optional<Mat<F>> invert(const Mat<F>& M, const F& zero, const F& one) {
  assert(M.rows == M.cols);
  int n = M.rows;
  Mat<F> A = M, I(n, n, zero);
  for (int i = 0; i < n; ++i) I(i, i) = one;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!fzero(A(r, c))) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt;
    for (int cc = 0; cc < n; ++cc) {
      std::swap(A(p, cc), A(c, cc));
      std::swap(I(p, cc), I(c, cc));
    }
    F inv = A(c, c);
    for (int r = 0; r < n; ++r) {
      if (r == c || fzero(A(r, c))) continue;
      F f = A(r, c) / inv;
      for (int cc = 0; cc < n; ++cc) {
        A(r, cc) = A(r, cc) - f * A(c, cc);
        I(r, cc) = I(r, cc) - f * I(c, cc);
      }
    }
  }
  for (int r = 0; r < n; ++r) {
    F inv = A(r, r);
    for (int c = 0; c < n; ++c) I(r, c) = I(r, c) / inv;
  }
  return I;
}

}  // namespace kst

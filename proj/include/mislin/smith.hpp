#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mislin/int_matrix.hpp"

namespace mislin {

// u * input * v = d with u, v unimodular, d diagonal, d(i,i) >= 0,
// d(i,i) | d(i+1,i+1), zero entries trailing.
struct SnfDecomposition {
  IntMatrix u;  // rows x rows
  IntMatrix d;  // rows x cols
  IntMatrix v;  // cols x cols
};

// Pivot policy is part of the contract: least |entry| in the trailing
// submatrix, ties broken by lowest (row, col). Keeps runs reproducible.
inline SnfDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(nr);
  IntMatrix v = IntMatrix::identity(nc);

  auto row_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t t = 0; t < nc; ++t) d(dst, t) += q * d(src, t);
    for (std::size_t t = 0; t < nr; ++t) u(dst, t) += q * u(src, t);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t t = 0; t < nr; ++t) d(t, dst) += q * d(t, src);
    for (std::size_t t = 0; t < nc; ++t) v(t, dst) += q * v(t, src);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t t = 0; t < nc; ++t) std::swap(d(a, t), d(b, t));
    for (std::size_t t = 0; t < nr; ++t) std::swap(u(a, t), u(b, t));
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t t = 0; t < nr; ++t) std::swap(d(t, a), d(t, b));
    for (std::size_t t = 0; t < nc; ++t) std::swap(v(t, a), v(t, b));
  };
  auto row_negate = [&](std::size_t a) {
    for (std::size_t t = 0; t < nc; ++t) d(a, t) = -d(a, t);
    for (std::size_t t = 0; t < nr; ++t) u(a, t) = -u(a, t);
  };

  const std::size_t lim = nr < nc ? nr : nc;
  for (std::size_t k = 0; k < lim; ++k) {
    // Select pivot; bail out if the trailing submatrix is zero.
    bool any = false;
    std::size_t pi = k, pj = k;
    Int best;
    for (std::size_t i = k; i < nr; ++i)
      for (std::size_t j = k; j < nc; ++j) {
        if (d(i, j) == 0) continue;
        Int a = abs(d(i, j));
        if (!any || a < best) {
          any = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!any) break;
    row_swap(k, pi);
    col_swap(k, pj);

    for (;;) {
      // Euclidean sweeps; truncated quotients leave |rem| < |pivot|, so if
      // anything survives we re-select a strictly smaller pivot and retry.
      bool clean = true;
      for (std::size_t i = k + 1; i < nr; ++i) {
        if (d(i, k) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, k).get_mpz_t(), d(k, k).get_mpz_t());
        row_add(i, k, -q);
        if (d(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < nc; ++j) {
        if (d(k, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d(k, j).get_mpz_t(), d(k, k).get_mpz_t());
        col_add(j, k, -q);
        if (d(k, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest surviving entry of row/col k back to the pivot.
        std::size_t bi = k, bj = k;
        Int ba = abs(d(k, k));
        for (std::size_t i = k + 1; i < nr; ++i)
          if (d(i, k) != 0 && abs(d(i, k)) < ba) {
            ba = abs(d(i, k));
            bi = i;
            bj = k;
          }
        for (std::size_t j = k + 1; j < nc; ++j)
          if (d(k, j) != 0 && abs(d(k, j)) < ba) {
            ba = abs(d(k, j));
            bi = k;
            bj = j;
          }
        row_swap(k, bi);
        col_swap(k, bj);
        continue;
      }
      // Column and row are clear; enforce divisibility into the remainder.
      bool fixed = false;
      for (std::size_t i = k + 1; i < nr && !fixed; ++i)
        for (std::size_t j = k + 1; j < nc && !fixed; ++j)
          if (d(i, j) % d(k, k) != 0) {
            row_add(k, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d(k, k) < 0) row_negate(k);
  }
  return {std::move(u), std::move(d), std::move(v)};
}

// Solves x^T * c = k^T over Z via a precomputed SNF of c^T; exposes the
// kernel basis so callers can sweep the full solution lattice. Used by the
// intertwining-equation oracle, where each row of the unknown matrix solves
// one such system.
class LinearSolver {
 public:
  explicit LinearSolver(const IntMatrix& c)
      : cols_(c.cols()), rows_(c.rows()), snf_(smith_normal_form(transpose(c))) {
    const std::size_t lim =
        snf_.d.rows() < snf_.d.cols() ? snf_.d.rows() : snf_.d.cols();
    for (std::size_t j = 0; j < lim; ++j)
      if (snf_.d(j, j) != 0) ++rank_;
    for (std::size_t j = rank_; j < rows_; ++j) {
      std::vector<Int> basis(rows_);
      for (std::size_t i = 0; i < rows_; ++i) basis[i] = snf_.v(i, j);
      kernel_.push_back(std::move(basis));
    }
  }

  std::size_t rank() const { return rank_; }
  const std::vector<std::vector<Int>>& kernel_basis() const { return kernel_; }

  // Particular solution of x^T c = k^T, or false if none exists over Z.
  bool solve(const std::vector<Int>& k, std::vector<Int>& x) const {
    if (k.size() != cols_)
      throw std::invalid_argument("LinearSolver::solve: rhs length mismatch");
    // c^T x = k  =>  d z = u k, x = v z.
    std::vector<Int> uk(cols_);
    for (std::size_t i = 0; i < cols_; ++i) {
      for (std::size_t t = 0; t < cols_; ++t) uk[i] += snf_.u(i, t) * k[t];
    }
    std::vector<Int> z(rows_);
    for (std::size_t i = 0; i < cols_; ++i) {
      Int di = (i < rows_) ? snf_.d(i, i) : Int(0);
      if (di == 0) {
        if (uk[i] != 0) return false;
      } else {
        if (uk[i] % di != 0) return false;
        z[i] = uk[i] / di;
      }
    }
    x.assign(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < rows_; ++j) x[i] += snf_.v(i, j) * z[j];
    return true;
  }

 private:
  std::size_t cols_;  // length of rhs = columns of original c
  std::size_t rows_;  // length of solution = rows of original c
  std::size_t rank_ = 0;
  SnfDecomposition snf_;
  std::vector<std::vector<Int>> kernel_;
};

}  // namespace mislin

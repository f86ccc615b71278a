#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mislin {

using Int = mpz_class;

// Dense matrix over Z. Row-major, exact arithmetic, any rectangular shape
// including zero-by-n. Intentionally minimal: the algebra lives in free
// functions so the type stays a dumb value.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // Convenience builder used heavily by tests and the CLI.
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != m.cols_)
        throw std::invalid_argument("from_rows: ragged row lengths");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) {
    check(i, j);
    return data_[i * cols_ + j];
  }
  const Int& operator()(std::size_t i, std::size_t j) const {
    check(i, j);
    return data_[i * cols_ + j];
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("IntMatrix: index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

inline std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  os << "]";
  return os.str();
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: inner dimensions disagree (" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + ")");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

inline IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_add: shapes disagree");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

inline IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_sub: shapes disagree");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

inline IntMatrix mat_scale(const Int& c, const IntMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

inline IntMatrix transpose(const IntMatrix& a) {
  IntMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

// Canonical residue in [0, m). m >= 1.
inline Int mod_canon(const Int& x, const Int& m) {
  if (m < 1) throw std::invalid_argument("mod_canon: modulus must be >= 1");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline IntMatrix mat_mod(const IntMatrix& a, const Int& m) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = mod_canon(a(i, j), m);
  return r;
}

inline bool is_identity_mod(const IntMatrix& a, const Int& m) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (mod_canon(a(i, j) - (i == j ? 1 : 0), m) != 0) return false;
  return true;
}

inline bool is_zero(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

// Entries off the main diagonal (in the rectangular sense) all zero.
inline bool is_diagonal(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) != 0) return false;
  return true;
}

// Bareiss fraction-free elimination; every interior division is exact.
// det of the empty 0x0 matrix is 1 (the empty product), which downstream
// code relies on for rank-0 sides of a map.
inline Int determinant(const IntMatrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign < 0 ? Int(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

// Classical adjugate via cofactors: m * adjugate(m) = det(m) * I.
// Quintic in n, which is irrelevant at the rank bounds this library works at.
inline IntMatrix adjugate(const IntMatrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("adjugate: matrix not square");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc) = m(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      adj(j, i) = cof;
    }
  return adj;
}

// Exact inverse of a matrix with det = +-1.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  Int d = determinant(m);
  if (d != 1 && d != -1)
    throw std::invalid_argument("unimodular_inverse: determinant is " +
                                d.get_str() + ", not +-1");
  IntMatrix adj = adjugate(m);
  return d == 1 ? adj : mat_scale(-1, adj);
}

}  // namespace mislin

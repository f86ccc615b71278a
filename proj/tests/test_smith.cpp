#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mislin/smith.hpp"

using namespace mislin;

namespace {

void check_snf_contract(const IntMatrix& m) {
  SnfDecomposition s = smith_normal_form(m);
  INFO("matrix:\n" << to_string(m));
  REQUIRE(mat_mul(s.u, mat_mul(m, s.v)) == s.d);
  Int du = determinant(s.u), dv = determinant(s.v);
  REQUIRE((du == 1 || du == -1));
  REQUIRE((dv == 1 || dv == -1));
  REQUIRE(is_diagonal(s.d));
  const std::size_t lim = std::min(s.d.rows(), s.d.cols());
  for (std::size_t i = 0; i < lim; ++i) REQUIRE(s.d(i, i) >= 0);
  for (std::size_t i = 0; i + 1 < lim; ++i) {
    if (s.d(i + 1, i + 1) != 0) {
      REQUIRE(s.d(i, i) != 0);
      REQUIRE(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form on frozen values") {
  SnfDecomposition s = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(s.d == IntMatrix::from_rows({{2, 0}, {0, 4}}));
  s = smith_normal_form(IntMatrix::from_rows({{1, 0}, {0, 1}}));
  CHECK(s.d == IntMatrix::identity(2));
  s = smith_normal_form(IntMatrix(2, 2));
  CHECK(s.d == IntMatrix(2, 2));
  s = smith_normal_form(IntMatrix::from_rows({{6, 10, 15}}));
  CHECK(s.d == IntMatrix::from_rows({{1, 0, 0}}));
  s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 0}}));
  CHECK(s.d == IntMatrix::from_rows({{2, 0}, {0, 0}}));
}

TEST_CASE("smith normal form contract on random matrices") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 300; ++it) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = static_cast<long>(rng() % 61) - 30;
    check_snf_contract(m);
  }
  check_snf_contract(IntMatrix(0, 3));
  check_snf_contract(IntMatrix(3, 0));
  check_snf_contract(IntMatrix(0, 0));
}

TEST_CASE("linear solver finds the full solution lattice of x^T c = k^T") {
  // c = [[2,0],[0,0]]: x^T c = (2 x0, 0), so k solvable iff k0 even, k1 = 0;
  // kernel is spanned by e1.
  LinearSolver solver(IntMatrix::from_rows({{2, 0}, {0, 0}}));
  CHECK(solver.rank() == 1);
  REQUIRE(solver.kernel_basis().size() == 1);
  std::vector<Int> x;
  REQUIRE(solver.solve({Int(4), Int(0)}, x));
  CHECK(x[0] * 2 == 4);
  CHECK_FALSE(solver.solve({Int(3), Int(0)}, x));
  CHECK_FALSE(solver.solve({Int(4), Int(1)}, x));
  const auto& kb = solver.kernel_basis()[0];
  CHECK(kb[0] * 2 == 0);  // kernel vectors annihilate c

  LinearSolver inv(IntMatrix::from_rows({{2, 1}, {1, 1}}));  // unimodular c
  CHECK(inv.rank() == 2);
  CHECK(inv.kernel_basis().empty());
  REQUIRE(inv.solve({Int(1), Int(0)}, x));
  // x^T c = e0^T means x is the first row of c^{-1} = [[1,-1],[-1,2]].
  CHECK(x[0] == 1);
  CHECK(x[1] == -1);
}

TEST_CASE("linear solver solutions verify on random systems") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 100; ++it) {
    std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = static_cast<long>(rng() % 9) - 4;
    LinearSolver solver(m);
    // Build a solvable rhs from a random x, then recover some solution.
    std::vector<Int> x0(r);
    for (std::size_t i = 0; i < r; ++i) x0[i] = static_cast<long>(rng() % 9) - 4;
    std::vector<Int> k(c, 0);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i) k[j] += x0[i] * m(i, j);
    std::vector<Int> x;
    REQUIRE(solver.solve(k, x));
    for (std::size_t j = 0; j < c; ++j) {
      Int acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc += x[i] * m(i, j);
      REQUIRE(acc == k[j]);
    }
    for (const auto& kb : solver.kernel_basis())
      for (std::size_t j = 0; j < c; ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i < r; ++i) acc += kb[i] * m(i, j);
        REQUIRE(acc == 0);
      }
  }
}

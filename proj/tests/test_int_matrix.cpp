#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mislin/int_matrix.hpp"

using namespace mislin;

namespace {

IntMatrix random_square(std::mt19937_64& rng, std::size_t n, long span) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = static_cast<long>(rng() % (2 * span + 1)) - span;
  return m;
}

}  // namespace

TEST_CASE("determinant on frozen values") {
  CHECK(determinant(IntMatrix::from_rows({{2, 4}, {6, 8}})) == -8);
  CHECK(determinant(IntMatrix::from_rows({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(IntMatrix::from_rows({{5}})) == 5);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(determinant(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant is alternating and multiplicative on samples") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    std::size_t n = 1 + rng() % 4;
    IntMatrix a = random_square(rng, n, 6), b = random_square(rng, n, 6);
    CHECK(determinant(mat_mul(a, b)) == determinant(a) * determinant(b));
  }
}

TEST_CASE("adjugate satisfies m*adj(m) = det(m)*I") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    std::size_t n = 1 + rng() % 4;
    IntMatrix m = random_square(rng, n, 5);
    IntMatrix prod = mat_mul(m, adjugate(m));
    CHECK(prod == mat_scale(determinant(m), IntMatrix::identity(n)));
  }
  CHECK(adjugate(IntMatrix::from_rows({{7}})) == IntMatrix::from_rows({{1}}));
  CHECK(adjugate(IntMatrix(0, 0)) == IntMatrix(0, 0));
}

TEST_CASE("unimodular_inverse round-trips and rejects other determinants") {
  IntMatrix m = IntMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK(mat_mul(m, unimodular_inverse(m)) == IntMatrix::identity(2));
  IntMatrix w = IntMatrix::from_rows({{0, 1}, {1, 0}});  // det -1
  CHECK(mat_mul(unimodular_inverse(w), w) == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows({{2}})),
                  std::invalid_argument);
}

TEST_CASE("mod_canon lands in [0, m)") {
  CHECK(mod_canon(-1, 5) == 4);
  CHECK(mod_canon(-10, 5) == 0);
  CHECK(mod_canon(7, 5) == 2);
  CHECK(mod_canon(3, 1) == 0);
  CHECK_THROWS_AS(mod_canon(1, 0), std::invalid_argument);
}

TEST_CASE("modular identity test tolerates multiples of the modulus") {
  CHECK(is_identity_mod(IntMatrix::from_rows({{16, 15}, {0, 1}}), 15));
  CHECK_FALSE(is_identity_mod(IntMatrix::from_rows({{16, 14}, {0, 1}}), 15));
  CHECK(is_identity_mod(IntMatrix::from_rows({{3, 7}, {2, 9}}), 1));
}

TEST_CASE("shape helpers") {
  CHECK(is_zero(IntMatrix(2, 3)));
  CHECK_FALSE(is_zero(IntMatrix::from_rows({{0, 1}})));
  CHECK(is_diagonal(IntMatrix::from_rows({{2, 0}, {0, 3}})));
  CHECK(is_diagonal(IntMatrix::from_rows({{2, 0, 0}, {0, 3, 0}})));
  CHECK_FALSE(is_diagonal(IntMatrix::from_rows({{2, 1}, {0, 3}})));
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
  IntMatrix m(2, 2);
  CHECK_THROWS_AS(m(2, 0), std::out_of_range);
}

TEST_CASE("arithmetic helpers agree with by-hand results") {
  IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  IntMatrix b = IntMatrix::from_rows({{5, 6}, {7, 8}});
  CHECK(mat_mul(a, b) == IntMatrix::from_rows({{19, 22}, {43, 50}}));
  CHECK(mat_add(a, b) == IntMatrix::from_rows({{6, 8}, {10, 12}}));
  CHECK(mat_sub(b, a) == IntMatrix::from_rows({{4, 4}, {4, 4}}));
  CHECK(mat_scale(3, a) == IntMatrix::from_rows({{3, 6}, {9, 12}}));
  CHECK(transpose(IntMatrix::from_rows({{1, 2, 3}})) ==
        IntMatrix::from_rows({{1}, {2}, {3}}));
  CHECK_THROWS_AS(mat_mul(IntMatrix(2, 3), IntMatrix(2, 3)), std::invalid_argument);
}

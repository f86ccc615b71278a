#include <catch2/catch_amalgamated.hpp>

#include "mislin/abelian_group.hpp"

using namespace mislin;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("normalize computes invariant factors from a relation matrix") {
  // Z^2 / <(2,4),(6,8)> has |det| = 8 elements: Z/2 + Z/4.
  FinAbGroup g = normalize(IntMatrix::from_rows({{2, 4}, {6, 8}}), 2);
  CHECK(g.free_rank == 0);
  CHECK(g.invariant_factors == ints({2, 4}));
  CHECK(g.order() == 8);
  CHECK(exponent(g) == 4);
  CHECK(to_string(g) == "Z/2 + Z/4");

  // A single relation on two generators leaves a free line.
  g = normalize(IntMatrix::from_rows({{2, 4}}), 2);
  CHECK(g.free_rank == 1);
  CHECK(g.invariant_factors == ints({2}));
  CHECK_FALSE(g.is_finite());
  CHECK_THROWS_AS(g.order(), std::domain_error);
  CHECK_THROWS_AS(exponent(g), std::domain_error);

  // No relations at all.
  g = normalize(IntMatrix(0, 3), 3);
  CHECK(g.free_rank == 3);
  CHECK(g.invariant_factors.empty());

  // Unit relations collapse everything.
  g = normalize(IntMatrix::identity(2), 2);
  CHECK(g.is_trivial());
  CHECK(to_string(g) == "0");
}

TEST_CASE("make_group validates the invariant-factor chain") {
  CHECK(make_group(0, ints({2, 4})).order() == 8);
  CHECK(make_group(0, {}).is_trivial());
  CHECK(exponent(make_group(0, {})) == 1);
  CHECK_THROWS_AS(make_group(0, ints({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(make_group(0, ints({2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(make_group(0, ints({0, 2})), std::invalid_argument);
}

TEST_CASE("quotients collapse the named generators") {
  // Z/4 by <2> -> Z/2
  FinAbGroup z4 = make_group(0, ints({4}));
  CHECK(quotient_by(z4, {ints({2})}).invariant_factors == ints({2}));
  CHECK(quotient_by(z4, {ints({1})}).is_trivial());
  CHECK(quotient_by(z4, {}) == z4);

  // (Z/4 + Z/2) by <(2,1)> -> Z/4
  FinAbGroup g = make_group(0, ints({2, 4}));
  // coordinates follow the stored factor order (2, then 4)
  FinAbGroup q = quotient_by(g, {ints({1, 2})});
  CHECK(q.invariant_factors == ints({4}));
}

TEST_CASE("quotient projections kill exactly the quotiented generators") {
  FinAbGroup g = make_group(0, ints({2, 4, 8}));
  std::vector<std::vector<Int>> gens = {ints({1, 2, 0}), ints({0, 0, 4})};
  QuotientMap qm = quotient_with_map(g, gens);
  for (const auto& gen : gens) {
    std::vector<Int> img = qm.project(gen);
    for (const Int& c : img) CHECK(c == 0);
  }
  // Projection is a homomorphism: proj(a + b) = proj(a) + proj(b) mod factors.
  std::vector<Int> a = ints({1, 3, 5}), b = ints({1, 1, 7});
  std::vector<Int> ab = ints({1 + 1, 3 + 1, 5 + 7});
  std::vector<Int> pa = qm.project(a), pb = qm.project(b), pab = qm.project(ab);
  REQUIRE(pa.size() == pab.size());
  for (std::size_t i = 0; i < pab.size(); ++i) {
    Int m = qm.group.invariant_factors[i];
    CHECK(mod_canon(pa[i] + pb[i], m) == mod_canon(pab[i], m));
  }
  // Quotient by every basis vector is trivial.
  CHECK(quotient_by(g, {ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})})
            .is_trivial());
}

TEST_CASE("quotient rejects malformed generators") {
  FinAbGroup g = make_group(0, ints({4}));
  CHECK_THROWS_AS(quotient_by(g, {ints({1, 2})}), std::invalid_argument);
}

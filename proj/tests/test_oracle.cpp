#include <catch2/catch_amalgamated.hpp>

#include "mislin/oracle.hpp"

using namespace mislin;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

using Tuple = std::vector<std::uint64_t>;

}  // namespace

TEST_CASE("unit enumeration") {
  CHECK(enum_units(8) == std::vector<std::uint64_t>{1, 3, 5, 7});
  CHECK(enum_units(1) == std::vector<std::uint64_t>{0});
  CHECK(enum_units(2) == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(enum_units(0), std::invalid_argument);
  CHECK_THROWS_AS(enum_units(2000000), std::domain_error);
}

TEST_CASE("brute exponents") {
  CHECK(brute_exponent(enum_units(15), 15) == 4);
  CHECK(brute_exponent(enum_units(8), 8) == 2);
  CHECK(brute_exponent(enum_units(1), 1) == 1);
  CHECK(brute_exponent(make_group(0, ints({2, 12}))) == 12);
  CHECK(brute_exponent(make_group(0, {})) == 1);
  CHECK_THROWS_AS(brute_exponent(make_group(1, {})), std::invalid_argument);
}

TEST_CASE("determinant pairs of an unimodular intertwiner stay diagonal") {
  OracleDetImage img = enum_det_pairs(IntMatrix::identity(1), 1, 1, 5, 6);
  CHECK(img.arity == 2);
  std::set<Tuple> expect = {{1, 1}, {2, 2}, {3, 3}, {4, 4}};
  CHECK(img.tuples == expect);
  for (const auto& [tup, wit] : img.witnesses) {
    (void)tup;
    CHECK(in_t_prime(wit, IntMatrix::identity(1), 5));
  }
}

TEST_CASE("determinant pairs of the zero intertwiner fill the full square") {
  OracleDetImage img = enum_det_pairs(IntMatrix(1, 1), 1, 1, 3, 4);
  std::set<Tuple> expect = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  CHECK(img.tuples == expect);
  for (const auto& [tup, wit] : img.witnesses) {
    (void)tup;
    CHECK(in_t_prime(wit, IntMatrix(1, 1), 3));
  }
}

TEST_CASE("one-sided and empty degrees") {
  OracleDetImage none = enum_det_pairs(std::nullopt, 0, 0, 5, 6);
  CHECK(none.arity == 0);
  CHECK(none.tuples == std::set<Tuple>{{}});

  OracleDetImage one = enum_det_pairs(std::nullopt, 2, 0, 5, 6);
  CHECK(one.arity == 1);
  CHECK(one.tuples == std::set<Tuple>{{1}, {2}, {3}, {4}});
  for (const auto& [tup, wit] : one.witnesses) {
    CHECK(wit.a2.rows() == 0);
    CHECK(mod_canon(determinant(wit.a1), 5) == tup[0]);
  }
}

TEST_CASE("enumeration guards reject oversized problems") {
  CHECK_THROWS_AS(enum_det_pairs(IntMatrix::identity(4), 4, 4, 5, 6),
                  std::domain_error);
  CHECK_THROWS_AS(enum_det_pairs(IntMatrix::identity(3), 3, 3, 5, 20),
                  std::domain_error);
  CHECK_THROWS_AS(enum_det_pairs(IntMatrix(2, 2), 2, 2, 3, 5),
                  std::domain_error);  // free lattice blows the guard
  CHECK_THROWS_AS(enum_det_pairs(IntMatrix::identity(1), 1, 1, Int(2000000), 3),
                  std::domain_error);
  CHECK_THROWS_AS(enum_det_pairs(IntMatrix::identity(1), 1, 1, 5, 0),
                  std::invalid_argument);
}

TEST_CASE("growing the box never removes tuples") {
  IntMatrix c = IntMatrix::from_rows({{2, 0}, {0, 0}});
  OracleDetImage small = enum_det_pairs(c, 2, 2, 5, 3);
  OracleDetImage large = enum_det_pairs(c, 2, 2, 5, 7);
  for (const auto& t : small.tuples) CHECK(large.tuples.count(t) == 1);
}

TEST_CASE("span closure and diff directions") {
  // span of (2,2) mod 5 is the diagonal: (1,1),(2,2),(4,4),(3,3)
  auto span = span_det_tuples({ints({2, 2})}, 5, 2);
  std::set<Tuple> expect = {{1, 1}, {2, 2}, {3, 3}, {4, 4}};
  CHECK(span == expect);

  DetSubgroup iso = realizable_det_subgroup(IntMatrix::identity(1), 1, 1, 5);
  OracleDetImage img = enum_det_pairs(IntMatrix::identity(1), 1, 1, 5, 6);
  DetDiffReport rep = det_image_diff(iso, img, 5);
  CHECK(rep.oracle_inside_span);
  CHECK(rep.generators_witnessed);
  CHECK(rep.stray.empty());
  CHECK(rep.unwitnessed.empty());

  // a stray enumerated tuple is flagged
  OracleDetImage tampered = img;
  tampered.tuples.insert({1, 2});
  rep = det_image_diff(iso, tampered, 5);
  CHECK_FALSE(rep.oracle_inside_span);
  REQUIRE(rep.stray.size() == 1);
  CHECK(rep.stray[0] == Tuple{1, 2});

  // an unrealized characterized generator is flagged
  DetSubgroup wide = iso;
  wide.generators.push_back(ints({1, 2}));
  rep = det_image_diff(wide, img, 5);
  CHECK_FALSE(rep.generators_witnessed);
  REQUIRE(rep.unwitnessed.size() == 1);
  CHECK(rep.unwitnessed[0] == Tuple{1, 2});

  CHECK_THROWS_AS(det_image_diff(realizable_det_subgroup(std::nullopt, 1, 0, 5),
                                 img, 5),
                  std::invalid_argument);
}

TEST_CASE("modulus one collapses every tuple to the zero residue") {
  OracleDetImage img = enum_det_pairs(IntMatrix::identity(1), 1, 1, 1, 2);
  CHECK(img.tuples == std::set<Tuple>{{0, 0}});
  DetSubgroup s = realizable_det_subgroup(IntMatrix::identity(1), 1, 1, 1);
  DetDiffReport rep = det_image_diff(s, img, 1);
  CHECK(rep.oracle_inside_span);
  CHECK(rep.generators_witnessed);
}

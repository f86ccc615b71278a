#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "mislin/units.hpp"

using namespace mislin;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

Int apply_dlog(const UnitsPresentation& pres, const std::vector<Int>& coords) {
  Int acc = mod_canon(1, pres.modulus);
  for (std::size_t i = 0; i < coords.size(); ++i)
    acc = mod_canon(acc * powmod(pres.generators[i], coords[i], pres.modulus),
                    pres.modulus);
  return acc;
}

long gcd_count_totient(long t) {
  long c = 0;
  for (long u = 1; u <= t; ++u)
    if (std::gcd(u, t) == 1) ++c;
  return c;
}

}  // namespace

TEST_CASE("units mod 8 split into two order-2 factors") {
  UnitsPresentation p = units_group(8);
  CHECK(p.group.invariant_factors == ints({2, 2}));
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators == ints({3, 7}));
  CHECK(dlog(p, 3) == ints({1, 0}));
  CHECK(dlog(p, 7) == ints({0, 1}));
  CHECK(dlog(p, 5) == ints({1, 1}));  // 3*7 = 21 = 5 mod 8
  CHECK(dlog(p, 1) == ints({0, 0}));
}

TEST_CASE("units mod 15 form Z/2 + Z/4") {
  UnitsPresentation p = units_group(15);
  CHECK(p.group.invariant_factors == ints({2, 4}));
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators == ints({11, 7}));
  CHECK(powmod(7, 2, 15) == 4);
  CHECK(dlog(p, 4) == ints({0, 2}));
  CHECK(dlog(p, 14) == ints({1, 2}));  // -1 = 11 * 7^2 mod 15
  CHECK_THROWS_AS(dlog(p, 5), std::domain_error);
}

TEST_CASE("degenerate moduli give the trivial group") {
  CHECK(units_group(1).group.is_trivial());
  CHECK(units_group(2).group.is_trivial());
  CHECK(units_group(1).generators.empty());
  CHECK(dlog(units_group(2), 1).empty());
  CHECK_THROWS_AS(units_group(0), std::invalid_argument);
}

TEST_CASE("dlog round-trips on every unit for assorted moduli") {
  for (long t : {3L, 4L, 5L, 8L, 9L, 12L, 15L, 16L, 24L, 36L, 45L, 56L, 60L,
                 72L, 90L, 97L, 105L, 128L}) {
    UnitsPresentation p = units_group(t);
    INFO("t = " << t);
    REQUIRE(p.group.order() == gcd_count_totient(t));
    long checked = 0;
    for (long u = 1; u < t; ++u) {
      if (std::gcd(u, t) != 1) continue;
      std::vector<Int> coords = dlog(p, u);
      REQUIRE(coords.size() == p.generators.size());
      REQUIRE(apply_dlog(p, coords) == u);
      ++checked;
    }
    REQUIRE(checked == gcd_count_totient(t));
    // Generator i has order exactly the i-th invariant factor.
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      Int d = p.group.invariant_factors[i];
      REQUIRE(powmod(p.generators[i], d, t) == 1);
      for (const auto& [q, e] : factorize(d)) {
        (void)e;
        REQUIRE(powmod(p.generators[i], d / q, t) != 1);
      }
    }
  }
}

TEST_CASE("quotient by plus-minus one matches frozen structures") {
  CHECK(units_mod_pm1(15).group.invariant_factors == ints({4}));
  CHECK(units_mod_pm1(8).group.invariant_factors == ints({2}));
  CHECK(units_mod_pm1(12).group.invariant_factors == ints({2}));
  CHECK(units_mod_pm1(1).group.is_trivial());
  CHECK(units_mod_pm1(2).group.is_trivial());
  CHECK(units_mod_pm1(3).group.is_trivial());
  CHECK(units_mod_pm1(4).group.is_trivial());
  CHECK(units_mod_pm1(5).group.invariant_factors == ints({2}));
}

TEST_CASE("plus-minus-one projection identifies u and -u and is multiplicative") {
  UnitsModPm1 pm = units_mod_pm1(15);
  CHECK(pm.project(1) == ints({0}));
  CHECK(pm.project(14) == ints({0}));  // -1 collapses
  CHECK(pm.project(2) == pm.project(13));
  // 2 generates the order-4 quotient
  std::vector<Int> p2 = pm.project(2);
  REQUIRE(p2.size() == 1);
  CHECK(mod_canon(2 * p2[0], 4) != 0);
  // multiplicativity: project(2*7) = project(2) + project(7) mod 4
  std::vector<Int> p7 = pm.project(7), p14 = pm.project(14);
  CHECK(mod_canon(p2[0] + p7[0], 4) == p14[0]);
  CHECK_THROWS_AS(pm.project(5), std::domain_error);
}

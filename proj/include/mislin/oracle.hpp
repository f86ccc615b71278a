#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mislin/abelian_group.hpp"
#include "mislin/genus.hpp"
#include "mislin/int_matrix.hpp"
#include "mislin/smith.hpp"

// Brute-force oracles. Everything in here is deliberately dumb: definitions
// executed literally, with hard enumeration guards instead of cleverness, so
// the structured implementations have something independent to disagree with.
namespace mislin {

constexpr std::uint64_t unit_enum_guard = 1000000;         // max modulus
constexpr std::uint64_t matrix_enum_guard = 2000000;       // max A1 candidates
constexpr std::uint64_t free_enum_guard = 2000;            // max per-A1 solutions
constexpr std::uint64_t span_guard = 4000000;              // max spanned tuples

namespace oracle_detail {

inline std::uint64_t to_u64(const Int& v, const char* what,
                            std::uint64_t limit) {
  if (v < 1 || !v.fits_ulong_p() ||
      static_cast<std::uint64_t>(v.get_ui()) > limit)
    throw std::domain_error(std::string(what) + ": value " + v.get_str() +
                            " outside guard range [1, " +
                            std::to_string(limit) + "]");
  return static_cast<std::uint64_t>(v.get_ui());
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (a % m) * (b % m) % m;  // operands stay < 1e6, no overflow
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace oracle_detail

// All unit residues mod t, ascending. By convention mod 1 the single residue
// 0 counts as the unit.
inline std::vector<std::uint64_t> enum_units(std::uint64_t t) {
  if (t < 1) throw std::invalid_argument("enum_units: modulus must be >= 1");
  if (t > unit_enum_guard)
    throw std::domain_error("enum_units: modulus " + std::to_string(t) +
                            " exceeds enumeration guard " +
                            std::to_string(unit_enum_guard));
  if (t == 1) return {0};
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 1; u < t; ++u)
    if (std::gcd(u, t) == 1) out.push_back(u);
  return out;
}

// Exponent of the multiplicative group the given residues generate: the
// incremental lcm of element orders, each order found by literal powering.
inline std::uint64_t brute_exponent(const std::vector<std::uint64_t>& units,
                                    std::uint64_t t) {
  if (t < 1) throw std::invalid_argument("brute_exponent: modulus must be >= 1");
  if (t > unit_enum_guard)
    throw std::domain_error("brute_exponent: modulus exceeds enumeration guard");
  if (t == 1) return 1;
  std::uint64_t l = 1;
  for (std::uint64_t u : units) {
    if (std::gcd(u, t) != 1)
      throw std::invalid_argument("brute_exponent: " + std::to_string(u) +
                                  " is not a unit mod " + std::to_string(t));
    if (oracle_detail::powmod(u, l, t) == 1) continue;  // already killed
    std::uint64_t acc = u % t, ord = 1;
    while (acc != 1) {
      acc = oracle_detail::mulmod(acc, u, t);
      ++ord;
      if (ord > t) throw std::logic_error("brute_exponent: runaway order");
    }
    l = std::lcm(l, ord);
  }
  return l;
}

// Exponent of a finite abelian group by literal enumeration: walk every
// tuple in the direct sum, take the lcm of the element orders found by
// repeated addition (with the scalar-kill shortcut for already-covered ones).
inline std::uint64_t brute_exponent(const FinAbGroup& g) {
  if (!g.is_finite())
    throw std::invalid_argument("brute_exponent: group must be finite");
  Int n = g.order();
  if (n > Int(static_cast<unsigned long>(unit_enum_guard)))
    throw std::domain_error("brute_exponent: order " + n.get_str() +
                            " exceeds enumeration guard");
  std::vector<std::uint64_t> d;
  for (const Int& f : g.invariant_factors)
    d.push_back(static_cast<std::uint64_t>(f.get_ui()));
  if (d.empty()) return 1;
  std::vector<std::uint64_t> x(d.size(), 0);
  std::uint64_t l = 1;
  for (;;) {
    bool killed = true;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (oracle_detail::mulmod(l, x[i], d[i]) != 0) killed = false;
    if (!killed) {
      std::vector<std::uint64_t> acc = x;
      std::uint64_t ord = 1;
      auto is_zero = [&] {
        for (std::size_t i = 0; i < d.size(); ++i)
          if (acc[i] != 0) return false;
        return true;
      };
      while (!is_zero()) {
        for (std::size_t i = 0; i < d.size(); ++i) acc[i] = (acc[i] + x[i]) % d[i];
        ++ord;
      }
      l = std::lcm(l, ord);
    }
    std::size_t i = 0;
    while (i < d.size() && x[i] == d[i] - 1) x[i++] = 0;
    if (i == d.size()) break;
    ++x[i];
  }
  return l;
}

// Determinant tuples of T' members found by literal enumeration: every a1
// with entries in [-box, box], and for each one the full solution lattice of
// a2*c = c*a1 (particular solution per row plus kernel multiples with
// coefficients in [-box, box]). Witnesses keep one realizing pair per tuple.
struct OracleDetImage {
  int arity = 0;
  Int modulus = 1;
  Int box = 1;
  std::set<std::vector<std::uint64_t>> tuples;
  std::map<std::vector<std::uint64_t>, MatrixPair> witnesses;
};

inline OracleDetImage enum_det_pairs(const std::optional<IntMatrix>& c,
                                     long rank_x, long rank_y,
                                     const Int& t_hat_value, const Int& box) {
  if (rank_x < 0 || rank_y < 0)
    throw std::invalid_argument("enum_det_pairs: negative rank");
  if (rank_x > 3 || rank_y > 3)
    throw std::domain_error("enum_det_pairs: rank above 3 is not enumerable");
  if (box < 1) throw std::invalid_argument("enum_det_pairs: box must be >= 1");
  const std::uint64_t th =
      oracle_detail::to_u64(t_hat_value, "enum_det_pairs: modulus", unit_enum_guard);
  const std::uint64_t b =
      oracle_detail::to_u64(box, "enum_det_pairs: box", unit_enum_guard);
  const std::uint64_t side = 2 * b + 1;

  auto guard_count = [&](std::size_t dims, std::uint64_t limit, const char* what) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dims; ++i) {
      if (count > limit / side + 1) count = limit + 1;  // saturate
      else count *= side;
    }
    if (count > limit)
      throw std::domain_error(std::string("enum_det_pairs: ") + what + " needs " +
                              std::to_string(dims) + " boxed coordinates, over the guard");
    return count;
  };

  auto det_residue = [&](const IntMatrix& m, std::uint64_t& out) {
    Int d = determinant(m);
    if (!coprime(d, t_hat_value)) return false;
    out = mod_canon(d, t_hat_value).get_ui();
    if (t_hat_value == 1) out = 0;
    return true;
  };

  OracleDetImage img;
  img.modulus = t_hat_value;
  img.box = box;
  if (rank_x == 0 && rank_y == 0) {
    img.arity = 0;
    img.tuples.emplace();
    img.witnesses.emplace(std::vector<std::uint64_t>{},
                          MatrixPair{IntMatrix::identity(0), IntMatrix::identity(0)});
    return img;
  }

  // Odometer over `dims` coordinates in [-b, b]; calls f per point until f
  // returns false. Once the tuple set holds every coprime tuple it can never
  // grow, so callers bail out at that saturation count.
  auto sweep = [&](std::size_t dims, auto&& f) {
    std::vector<long> coord(dims, -static_cast<long>(b));
    for (;;) {
      if (!f(coord)) return;
      std::size_t i = 0;
      while (i < dims && coord[i] == static_cast<long>(b)) coord[i++] = -static_cast<long>(b);
      if (i == dims) break;
      ++coord[i];
    }
  };
  const std::uint64_t n_units = enum_units(th).size();

  if (rank_x == 0 || rank_y == 0) {
    img.arity = 1;
    const std::size_t r = static_cast<std::size_t>(rank_x ? rank_x : rank_y);
    guard_count(r * r, matrix_enum_guard, "one-sided matrix");
    sweep(r * r, [&](const std::vector<long>& coord) {
      IntMatrix a(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a(i, j) = coord[i * r + j];
      std::uint64_t u;
      if (!det_residue(a, u)) return true;
      std::vector<std::uint64_t> tup{u};
      if (img.tuples.insert(tup).second) {
        MatrixPair w = rank_x ? MatrixPair{a, IntMatrix::identity(0)}
                              : MatrixPair{IntMatrix::identity(0), a};
        img.witnesses.emplace(tup, w);
      }
      return img.tuples.size() < n_units;
    });
    return img;
  }

  if (!c.has_value())
    throw std::invalid_argument(
        "enum_det_pairs: matrix required when both ranks are positive");
  const std::size_t r1 = static_cast<std::size_t>(rank_x);
  const std::size_t r2 = static_cast<std::size_t>(rank_y);
  if (c->rows() != r2 || c->cols() != r1)
    throw std::invalid_argument("enum_det_pairs: matrix shape mismatch");

  img.arity = 2;
  LinearSolver solver(*c);
  const std::size_t kdim = solver.kernel_basis().size();
  guard_count(r1 * r1, matrix_enum_guard, "a1 side");
  guard_count(r2 * kdim, free_enum_guard, "a2 solution lattice");

  const std::uint64_t full = n_units * n_units;
  sweep(r1 * r1, [&](const std::vector<long>& coord) {
    IntMatrix a1(r1, r1);
    for (std::size_t i = 0; i < r1; ++i)
      for (std::size_t j = 0; j < r1; ++j) a1(i, j) = coord[i * r1 + j];
    std::uint64_t u1;
    if (!det_residue(a1, u1)) return true;

    IntMatrix rhs = mat_mul(*c, a1);  // a2 * c must equal this
    IntMatrix base(r2, r2);
    for (std::size_t i = 0; i < r2; ++i) {
      std::vector<Int> k(r1), x;
      for (std::size_t j = 0; j < r1; ++j) k[j] = rhs(i, j);
      if (!solver.solve(k, x)) return true;  // no integral a2 for this a1
      for (std::size_t j = 0; j < r2; ++j) base(i, j) = x[j];
    }

    sweep(r2 * kdim, [&](const std::vector<long>& lam) {
      IntMatrix a2 = base;
      for (std::size_t i = 0; i < r2; ++i)
        for (std::size_t m = 0; m < kdim; ++m) {
          const long l = lam[i * kdim + m];
          if (l == 0) continue;
          for (std::size_t j = 0; j < r2; ++j)
            a2(i, j) += l * solver.kernel_basis()[m][j];
        }
      std::uint64_t u2;
      if (!det_residue(a2, u2)) return true;
      std::vector<std::uint64_t> tup{u1, u2};
      if (img.tuples.insert(tup).second)
        img.witnesses.emplace(tup, MatrixPair{a1, a2});
      return img.tuples.size() < full;
    });
    return img.tuples.size() < full;
  });
  return img;
}

// Closure of generator tuples under componentwise multiplication mod t.
inline std::set<std::vector<std::uint64_t>> span_det_tuples(
    const std::vector<std::vector<Int>>& generators, const Int& t_hat_value,
    int arity) {
  const std::uint64_t th =
      oracle_detail::to_u64(t_hat_value, "span_det_tuples: modulus", unit_enum_guard);
  std::vector<std::uint64_t> id(static_cast<std::size_t>(arity), th == 1 ? 0 : 1);
  std::set<std::vector<std::uint64_t>> out{id};
  std::vector<std::vector<std::uint64_t>> gens;
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(arity))
      throw std::invalid_argument("span_det_tuples: generator arity mismatch");
    std::vector<std::uint64_t> gu;
    for (const Int& v : g) gu.push_back(mod_canon(v, t_hat_value).get_ui());
    gens.push_back(std::move(gu));
  }
  std::vector<std::vector<std::uint64_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        std::vector<std::uint64_t> prod(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          prod[i] = oracle_detail::mulmod(e[i], g[i], th);
        if (out.insert(prod).second) next.push_back(prod);
        if (out.size() > span_guard)
          throw std::domain_error("span_det_tuples: span exceeds guard");
      }
    frontier = std::move(next);
  }
  return out;
}

// Two-directional comparison of the characterized subgroup against the
// enumerated image: every enumerated tuple must lie in the span, and every
// characterized generator must have been hit by the enumeration.
struct DetDiffReport {
  bool oracle_inside_span = true;
  bool generators_witnessed = true;
  std::vector<std::vector<std::uint64_t>> stray;        // enumerated, not in span
  std::vector<std::vector<std::uint64_t>> unwitnessed;  // generators never enumerated
};

inline DetDiffReport det_image_diff(const DetSubgroup& characterized,
                                    const OracleDetImage& enumerated,
                                    const Int& t_hat_value) {
  if (characterized.arity != enumerated.arity)
    throw std::invalid_argument("det_image_diff: arity mismatch (" +
                                std::to_string(characterized.arity) + " vs " +
                                std::to_string(enumerated.arity) + ")");
  DetDiffReport rep;
  auto span =
      span_det_tuples(characterized.generators, t_hat_value, characterized.arity);
  for (const auto& tup : enumerated.tuples)
    if (!span.count(tup)) {
      rep.oracle_inside_span = false;
      rep.stray.push_back(tup);
    }
  for (const auto& g : characterized.generators) {
    std::vector<std::uint64_t> gu;
    for (const Int& v : g) gu.push_back(mod_canon(v, t_hat_value).get_ui());
    if (t_hat_value == 1)
      for (auto& x : gu) x = 0;
    if (!enumerated.tuples.count(gu)) {
      rep.generators_witnessed = false;
      rep.unwitnessed.push_back(gu);
    }
  }
  return rep;
}

}  // namespace mislin

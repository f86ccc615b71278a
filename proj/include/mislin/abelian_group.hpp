#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mislin/int_matrix.hpp"
#include "mislin/smith.hpp"

namespace mislin {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/d_1 + ... + Z/d_r with 2 <= d_1 | d_2 | ... | d_r.
struct FinAbGroup {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }

  Int order() const {
    if (free_rank > 0) throw std::domain_error("order: group is infinite");
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
  }

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.free_rank == b.free_rank && a.invariant_factors == b.invariant_factors;
  }
  friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) { return !(a == b); }
};

inline std::string to_string(const FinAbGroup& g) {
  if (g.is_trivial()) return "0";
  std::string s;
  for (std::size_t i = 0; i < g.free_rank; ++i) s += (s.empty() ? "Z" : " + Z");
  for (const Int& d : g.invariant_factors)
    s += (s.empty() ? "Z/" : " + Z/") + d.get_str();
  return s;
}

inline FinAbGroup make_group(std::size_t free_rank, std::vector<Int> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2)
      throw std::invalid_argument("make_group: invariant factor " +
                                  factors[i].get_str() + " is < 2");
    if (i && factors[i] % factors[i - 1] != 0)
      throw std::invalid_argument("make_group: factor " + factors[i].get_str() +
                                  " not divisible by " + factors[i - 1].get_str());
  }
  return {free_rank, std::move(factors)};
}

// Z^n modulo the row span of `relations` (one relator per row), brought to
// invariant-factor form via SNF. A 0-row matrix means no relations.
inline FinAbGroup normalize(const IntMatrix& relations, std::size_t n_generators) {
  if (relations.rows() != 0 && relations.cols() != n_generators)
    throw std::invalid_argument("normalize: relation width " +
                                std::to_string(relations.cols()) +
                                " does not match generator count " +
                                std::to_string(n_generators));
  if (relations.rows() == 0) return {n_generators, {}};
  SnfDecomposition snf = smith_normal_form(relations);
  const std::size_t lim =
      snf.d.rows() < snf.d.cols() ? snf.d.rows() : snf.d.cols();
  std::size_t nonzero = 0;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < lim; ++i) {
    const Int& di = snf.d(i, i);
    if (di == 0) continue;
    ++nonzero;
    if (di >= 2) factors.push_back(di);
  }
  return {n_generators - nonzero, std::move(factors)};
}

// Least e >= 1 with e*g = 0 for all g; infinite groups have none.
inline Int exponent(const FinAbGroup& g) {
  if (g.free_rank > 0)
    throw std::domain_error("exponent: group has a free part, exponent is infinite");
  return g.invariant_factors.empty() ? Int(1) : g.invariant_factors.back();
}

// Quotient of g by the subgroup its listed elements generate, together with
// the induced projection on coordinates. Element coordinates: one slot per
// invariant factor (in order) followed by one per free generator.
struct QuotientMap {
  FinAbGroup source;
  FinAbGroup group;
  IntMatrix v;                     // SNF change of basis, n x n
  std::vector<Int> moduli;         // modulus per v-column; 0 = free
  std::vector<std::size_t> kept;   // v-columns that survive as coordinates

  std::vector<Int> project(const std::vector<Int>& coords) const {
    const std::size_t n = source.invariant_factors.size() + source.free_rank;
    if (coords.size() != n)
      throw std::invalid_argument("project: expected " + std::to_string(n) +
                                  " coordinates, got " +
                                  std::to_string(coords.size()));
    std::vector<Int> out;
    out.reserve(kept.size());
    for (std::size_t j : kept) {
      Int y = 0;
      for (std::size_t i = 0; i < n; ++i) y += coords[i] * v(i, j);
      out.push_back(moduli[j] == 0 ? y : mod_canon(y, moduli[j]));
    }
    return out;
  }
};

inline QuotientMap quotient_with_map(const FinAbGroup& g,
                                     const std::vector<std::vector<Int>>& gens) {
  const std::size_t r = g.invariant_factors.size();
  const std::size_t n = r + g.free_rank;
  IntMatrix rel(r + gens.size(), n);
  for (std::size_t i = 0; i < r; ++i) rel(i, i) = g.invariant_factors[i];
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != n)
      throw std::invalid_argument("quotient_with_map: generator " +
                                  std::to_string(i) + " has " +
                                  std::to_string(gens[i].size()) +
                                  " coordinates, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) rel(r + i, j) = gens[i][j];
  }

  QuotientMap qm;
  qm.source = g;
  if (n == 0) {
    qm.group = {};
    qm.v = IntMatrix::identity(0);
    return qm;
  }
  SnfDecomposition snf = smith_normal_form(rel);
  qm.v = snf.v;
  qm.moduli.assign(n, 0);
  const std::size_t lim = snf.d.rows() < snf.d.cols() ? snf.d.rows() : snf.d.cols();
  for (std::size_t j = 0; j < lim; ++j) qm.moduli[j] = snf.d(j, j);

  std::vector<Int> factors;
  std::size_t free_rank = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (qm.moduli[j] == 1) continue;
    qm.kept.push_back(j);
    if (qm.moduli[j] == 0)
      ++free_rank;
    else
      factors.push_back(qm.moduli[j]);
  }
  qm.group = make_group(free_rank, std::move(factors));
  return qm;
}

inline FinAbGroup quotient_by(const FinAbGroup& g,
                              const std::vector<std::vector<Int>>& gens) {
  return quotient_with_map(g, gens).group;
}

}  // namespace mislin

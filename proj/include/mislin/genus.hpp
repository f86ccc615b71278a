#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mislin/abelian_group.hpp"
#include "mislin/int_matrix.hpp"
#include "mislin/numth.hpp"
#include "mislin/sl_lift.hpp"
#include "mislin/smith.hpp"
#include "mislin/space_model.hpp"
#include "mislin/units.hpp"

namespace mislin {

// An integer matrix pair (a1, a2) acting on the two sides of a fixed
// intertwining matrix c: membership in T' means a2*c = c*a1 exactly and both
// determinants are units mod t_hat.
struct MatrixPair {
  IntMatrix a1;  // square, c.cols() x c.cols()
  IntMatrix a2;  // square, c.rows() x c.rows()
};

inline void check_pair_shapes(const MatrixPair& p, const IntMatrix& c) {
  if (!p.a1.is_square() || p.a1.rows() != c.cols())
    throw std::invalid_argument("pair: a1 must be square of size " +
                                std::to_string(c.cols()) + ", got " +
                                std::to_string(p.a1.rows()) + "x" +
                                std::to_string(p.a1.cols()));
  if (!p.a2.is_square() || p.a2.rows() != c.rows())
    throw std::invalid_argument("pair: a2 must be square of size " +
                                std::to_string(c.rows()) + ", got " +
                                std::to_string(p.a2.rows()) + "x" +
                                std::to_string(p.a2.cols()));
}

inline bool in_t_prime(const MatrixPair& p, const IntMatrix& c, const Int& t_hat_value) {
  if (t_hat_value < 1)
    throw std::invalid_argument("in_t_prime: modulus must be >= 1");
  check_pair_shapes(p, c);
  if (!coprime(determinant(p.a1), t_hat_value)) return false;
  if (!coprime(determinant(p.a2), t_hat_value)) return false;
  return mat_mul(p.a2, c) == mat_mul(c, p.a1);
}

// Conjugating data that turns an arbitrary intertwiner into a diagonal one:
// c_diag = u * c * v, and pairs transport by (a1, a2) -> (v^-1 a1 v, u a2 u^-1).
struct DiagonalReduction {
  IntMatrix c_diag;
  IntMatrix u, v, u_inv, v_inv;

  MatrixPair to_diagonal(const MatrixPair& p) const {
    return {mat_mul(v_inv, mat_mul(p.a1, v)), mat_mul(u, mat_mul(p.a2, u_inv))};
  }
  MatrixPair from_diagonal(const MatrixPair& p) const {
    return {mat_mul(v, mat_mul(p.a1, v_inv)), mat_mul(u_inv, mat_mul(p.a2, u))};
  }
};

// Already-diagonal inputs keep identity conjugators; everything else goes
// through Smith normal form.
inline DiagonalReduction reduce_to_diagonal(const IntMatrix& c) {
  DiagonalReduction r;
  if (is_diagonal(c)) {
    r.c_diag = c;
    r.u = IntMatrix::identity(c.rows());
    r.u_inv = r.u;
    r.v = IntMatrix::identity(c.cols());
    r.v_inv = r.v;
    return r;
  }
  SnfDecomposition snf = smith_normal_form(c);
  r.c_diag = snf.d;
  r.u = snf.u;
  r.v = snf.v;
  r.u_inv = unimodular_inverse(snf.u);
  r.v_inv = unimodular_inverse(snf.v);
  return r;
}

namespace detail {

// Divisibility pattern induced by conjugation with diag(c): entry (i, j) of
// a transported matrix must be divisible by c_j / gcd(c_i, c_j). With the
// Smith chain c_0 | c_1 | ... this is c_j / c_i above the diagonal and 1
// elsewhere. Matrices obeying the pattern form a ring closed under adjugate;
// multiples of t_hat inside it form a two-sided ideal whose entrywise moduli
// are t_hat * pattern.
inline Int pattern_div(const std::vector<Int>& cvec, std::size_t i, std::size_t j) {
  return cvec[j] / gcd(cvec[i], cvec[j]);
}

inline void check_pattern(const IntMatrix& m, const std::vector<Int>& cvec,
                          const char* what) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) % pattern_div(cvec, i, j) != 0)
        throw std::logic_error(std::string(what) +
                               ": divisibility pattern violated at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
}

// diag(c) * m * diag(c)^{-1}, exact; the pattern above is precisely what
// makes this land in integer matrices.
inline IntMatrix scale_conjugate(const IntMatrix& m, const std::vector<Int>& cvec) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int num = cvec[i] * m(i, j);
      if (num % cvec[j] != 0)
        throw std::logic_error("scale_conjugate: inexact division at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
      r(i, j) = num / cvec[j];
    }
  return r;
}

// 2x2 building block congruent to diag(a, a_prime) modulo the patterned
// ideal (upper-right entry divisible by t_hat*d, lower-left by t_hat) with
// exact determinant delta in {+1, -1}. Solving
//   w + a*k + a_prime*x + t_hat*x*k = 0  (mod t_hat*d),  w = (a*a_prime - delta)/t_hat
// by CRT over the prime powers q || t_hat*d makes the leftover quantity
// divisible by t_hat*d; that quotient becomes the off-diagonal product.
inline IntMatrix unit_gadget(const Int& a, const Int& a_prime, int delta,
                             const Int& d, const Int& t_hat_value) {
  Int prod = a * a_prime - delta;
  if (prod % t_hat_value != 0)
    throw std::logic_error("unit_gadget: diagonal residues do not multiply to the target sign");
  Int w = prod / t_hat_value;
  Int td = t_hat_value * d;

  std::vector<std::pair<Int, Int>> xs, ks;
  for (const auto& [p, e] : factorize(td)) {
    Int q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    if (t_hat_value % p == 0) {
      // a stays a unit here; kill w with k alone.
      xs.emplace_back(0, q);
      ks.emplace_back(mod_canon(-w * inverse_mod(a, q), q), q);
    } else {
      // t_hat is a unit here; steer the (0,0) entry to 1, then solve for k.
      Int x = mod_canon((1 - a) * inverse_mod(t_hat_value, q), q);
      xs.emplace_back(x, q);
      ks.emplace_back(mod_canon(-(w + a_prime * x), q), q);
    }
  }
  Int x = crt(xs), k = crt(ks);
  Int leftover = w + a * k + a_prime * x + t_hat_value * x * k;
  if (leftover % td != 0)
    throw std::logic_error("unit_gadget: congruence system left a remainder");
  Int bg = leftover / td;

  IntMatrix g(2, 2);
  g(0, 0) = a + t_hat_value * x;
  g(1, 1) = a_prime + t_hat_value * k;
  g(0, 1) = td * bg;
  g(1, 0) = bg == 0 ? 0 : 1;
  g(1, 0) *= t_hat_value;
  if (determinant(g) != delta)
    throw std::logic_error("unit_gadget: determinant is not the target sign");
  return g;
}

// Core of the factorization: given the linked block p_g (pattern-obeying,
// det = +-1 mod t_hat), produce an exact-unimodular h with the same pattern
// and h = (p_g)^{-1} modulo the patterned ideal. Two stages:
//   A. reduce y0 = det^{-1} * adj(p_g) to a diagonal of units by patterned
//      row/column transvections (CRT pivot repair per prime of t_hat);
//   B. rebuild a unimodular matrix with that diagonal residue out of
//      unit_gadget blocks, telescoping partial products along the chain.
inline IntMatrix lift_linked_block(const IntMatrix& p_g,
                                   const std::vector<Int>& cvec,
                                   const Int& t_hat_value) {
  const std::size_t s = p_g.rows();
  if (cvec.size() != s || !p_g.is_square())
    throw std::invalid_argument("lift_linked_block: shape mismatch");
  if (s == 0) return IntMatrix::identity(0);
  if (t_hat_value == 1) return IntMatrix::identity(s);

  Int det_res = mod_canon(determinant(p_g), t_hat_value);
  int eps;
  if (det_res == mod_canon(1, t_hat_value))
    eps = 1;
  else if (det_res == mod_canon(-1, t_hat_value))
    eps = -1;
  else
    throw std::invalid_argument("lift_linked_block: determinant is " +
                                det_res.get_str() + " mod " +
                                t_hat_value.get_str() + ", not +-1");

  auto modulus_at = [&](std::size_t i, std::size_t j) -> Int {
    return t_hat_value * pattern_div(cvec, i, j);
  };

  IntMatrix w = mat_scale(inverse_mod(det_res, t_hat_value), adjugate(p_g));
  check_pattern(w, cvec, "lift_linked_block: y0");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) w(i, j) = mod_canon(w(i, j), modulus_at(i, j));

  // Accumulate the *inverses* of the applied transvections so the final
  // assembly is a plain triple product. Row op (i += x*j) on w appends a
  // column op to p_inv; column op (j += x*i) appends a row op to q_inv.
  IntMatrix p_inv = IntMatrix::identity(s), q_inv = IntMatrix::identity(s);
  auto row_op = [&](std::size_t i, std::size_t j, const Int& x) {
    if (x == 0) return;
    for (std::size_t t = 0; t < s; ++t)
      w(i, t) = mod_canon(w(i, t) + x * w(j, t), modulus_at(i, t));
    for (std::size_t t = 0; t < s; ++t) p_inv(t, j) -= x * p_inv(t, i);
  };
  auto col_op = [&](std::size_t j, std::size_t i, const Int& x) {
    // column j += x * column i
    if (x == 0) return;
    for (std::size_t t = 0; t < s; ++t)
      w(t, j) = mod_canon(w(t, j) + x * w(t, i), modulus_at(t, j));
    for (std::size_t t = 0; t < s; ++t) q_inv(i, t) -= x * q_inv(j, t);
  };

  const auto primes = factorize(t_hat_value);
  for (std::size_t k = 0; k < s; ++k) {
    // Pivot repair: add later columns (free direction along the chain) so the
    // pivot becomes a unit mod t_hat. A donor column exists for every prime
    // because the trailing block stays invertible mod p.
    std::vector<std::size_t> donor(primes.size(), s);
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      const Int& p = primes[pi].first;
      for (std::size_t j = k; j < s; ++j)
        if (w(k, j) % p != 0) {
          donor[pi] = j;
          break;
        }
      if (donor[pi] == s)
        throw std::logic_error("lift_linked_block: pivot row vanished mod " +
                               p.get_str());
    }
    for (std::size_t j = k + 1; j < s; ++j) {
      bool needed = false;
      std::vector<std::pair<Int, Int>> sys;
      for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        Int pe = 1;
        for (unsigned i = 0; i < primes[pi].second; ++i) pe *= primes[pi].first;
        sys.emplace_back(donor[pi] == j ? 1 : 0, pe);
        if (donor[pi] == j) needed = true;
      }
      if (needed) col_op(k, j, crt(sys));
    }

    Int u = inverse_mod(w(k, k), t_hat_value);
    // Clear below the pivot (free ops).
    for (std::size_t i = k + 1; i < s; ++i)
      row_op(i, k, mod_canon(-w(i, k) * u, t_hat_value));
    // Clear right of the pivot (constrained ops: multiplier divisible by the
    // pattern, which the entry itself already is).
    for (std::size_t j = k + 1; j < s; ++j) {
      Int d = pattern_div(cvec, k, j);
      if (w(k, j) % d != 0)
        throw std::logic_error("lift_linked_block: pattern lost during reduction");
      Int xp = mod_canon(-(w(k, j) / d) * u, t_hat_value);
      col_op(j, k, d * xp);
    }
  }

  std::vector<Int> diag(s);
  for (std::size_t k = 0; k < s; ++k) diag[k] = mod_canon(w(k, k), t_hat_value);

  // Stage B: telescope the diagonal into gadget blocks. Partial products
  // pi_k = diag_0 * ... * diag_k ride on the left slot of gadget k; the last
  // gadget absorbs the overall sign.
  IntMatrix t_mat = IntMatrix::identity(s);
  if (s == 1) {
    t_mat(0, 0) = eps;
  } else {
    Int pi_k = 1;
    for (std::size_t k = 0; k + 1 < s; ++k) {
      pi_k = mod_canon(pi_k * diag[k], t_hat_value);
      bool last = (k + 2 == s);
      Int a = pi_k;
      Int a_prime = last ? diag[k + 1] : inverse_mod(pi_k, t_hat_value);
      int delta = last ? eps : 1;
      IntMatrix g = unit_gadget(a, a_prime, delta,
                                pattern_div(cvec, k, k + 1), t_hat_value);
      IntMatrix embed = IntMatrix::identity(s);
      embed(k, k) = g(0, 0);
      embed(k, k + 1) = g(0, 1);
      embed(k + 1, k) = g(1, 0);
      embed(k + 1, k + 1) = g(1, 1);
      t_mat = mat_mul(t_mat, embed);
    }
  }

  IntMatrix h = mat_mul(p_inv, mat_mul(t_mat, q_inv));

  // Verify everything this lift promises; failures here are library bugs.
  check_pattern(h, cvec, "lift_linked_block: result");
  Int dh = determinant(h);
  if (dh != 1 && dh != -1)
    throw std::logic_error("lift_linked_block: result determinant " +
                           dh.get_str() + " is not +-1");
  IntMatrix prod = mat_mul(h, p_g);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (mod_canon(prod(i, j) - (i == j ? 1 : 0), modulus_at(i, j)) != 0)
        throw std::logic_error(
            "lift_linked_block: inverse congruence fails at (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
  return h;
}

}  // namespace detail

struct ClaimFactors {
  IntMatrix h1, h2;
};

// Factors an admissible pair through an exact-unimodular pair: given
// (g1, g2) in T' with both dets = 1 (mod t_hat), returns (h1, h2) in T' with
// det h_i = +-1 over Z, g1*h1 = I and h2*g2 = I (mod t_hat).
//
// Such a factorization does not exist for every admissible pair: transported
// to diagonal coordinates, members of T' are block matrices whose "linked"
// blocks (indices with nonzero diagonal entry) on the two sides are
// conjugate by diag(c), and a unimodular member forces that block's integer
// determinant to be +-1. The factorization therefore exists iff the linked
// block of g1 has determinant = +-1 (mod t_hat); otherwise this throws
// domain_error naming the obstruction. When it exists, the construction
// below finds it and re-verifies every promise exactly before returning.
inline ClaimFactors claim_factor(const MatrixPair& g, const IntMatrix& c,
                                 const Int& t_hat_value) {
  if (t_hat_value < 1)
    throw std::invalid_argument("claim_factor: modulus must be >= 1");
  check_pair_shapes(g, c);
  if (mat_mul(g.a2, c) != mat_mul(c, g.a1))
    throw std::invalid_argument("claim_factor: pair does not intertwine c");
  const Int one = mod_canon(1, t_hat_value);
  if (mod_canon(determinant(g.a1), t_hat_value) != one ||
      mod_canon(determinant(g.a2), t_hat_value) != one)
    throw std::invalid_argument(
        "claim_factor: admissible pair needs both dets = 1 mod " +
        t_hat_value.get_str());

  // Always reduce through a full Smith form: the lift machinery wants the
  // nonzero diagonal leading and divisibility-chained.
  SnfDecomposition snf = smith_normal_form(c);
  IntMatrix u_inv = unimodular_inverse(snf.u);
  IntMatrix v_inv = unimodular_inverse(snf.v);
  IntMatrix g1d = mat_mul(v_inv, mat_mul(g.a1, snf.v));
  IntMatrix g2d = mat_mul(snf.u, mat_mul(g.a2, u_inv));

  const std::size_t r1 = c.cols(), r2 = c.rows();
  std::vector<Int> cvec;
  for (std::size_t i = 0; i < std::min(r1, r2); ++i)
    if (snf.d(i, i) != 0) cvec.push_back(snf.d(i, i));
  const std::size_t s = cvec.size(), z1 = r1 - s, z2 = r2 - s;

  auto block = [](const IntMatrix& m, std::size_t i0, std::size_t j0,
                  std::size_t rows, std::size_t cols) {
    IntMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b(i, j) = m(i0 + i, j0 + j);
    return b;
  };

  // T' membership forces the off-pattern blocks to vanish exactly.
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = s; j < r1; ++j)
      if (g1d(i, j) != 0)
        throw std::logic_error("claim_factor: g1 block pattern violated");
  for (std::size_t i = s; i < r2; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (g2d(i, j) != 0)
        throw std::logic_error("claim_factor: g2 block pattern violated");

  IntMatrix p_g = block(g1d, 0, 0, s, s);
  IntMatrix q_g = block(g1d, s, 0, z1, s);
  IntMatrix r_g = block(g1d, s, s, z1, z1);
  IntMatrix qp_g = block(g2d, 0, s, s, z2);
  IntMatrix rp_g = block(g2d, s, s, z2, z2);

  Int linked_det = mod_canon(determinant(p_g), t_hat_value);
  if (linked_det != one && linked_det != mod_canon(-1, t_hat_value))
    throw std::domain_error(
        "claim_factor: no unimodular factorization exists: linked-block "
        "determinant is " + linked_det.get_str() + " mod " +
        t_hat_value.get_str() + ", not +-1");

  IntMatrix p_h = detail::lift_linked_block(p_g, cvec, t_hat_value);
  IntMatrix r_h = lift_inverse_unimodular(r_g, t_hat_value);
  IntMatrix rp_h = lift_inverse_unimodular(rp_g, t_hat_value);
  IntMatrix pp_h = detail::scale_conjugate(p_h, cvec);
  IntMatrix q_h = mat_scale(-1, mat_mul(r_h, mat_mul(q_g, p_h)));
  IntMatrix qp_h = mat_scale(-1, mat_mul(pp_h, mat_mul(qp_g, rp_h)));

  IntMatrix h1d(r1, r1), h2d(r2, r2);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      h1d(i, j) = p_h(i, j);
      h2d(i, j) = pp_h(i, j);
    }
  for (std::size_t i = 0; i < z1; ++i) {
    for (std::size_t j = 0; j < s; ++j) h1d(s + i, j) = q_h(i, j);
    for (std::size_t j = 0; j < z1; ++j) h1d(s + i, s + j) = r_h(i, j);
  }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < z2; ++j) h2d(i, s + j) = qp_h(i, j);
  for (std::size_t i = 0; i < z2; ++i)
    for (std::size_t j = 0; j < z2; ++j) h2d(s + i, s + j) = rp_h(i, j);

  ClaimFactors out{mat_mul(snf.v, mat_mul(h1d, v_inv)),
                   mat_mul(u_inv, mat_mul(h2d, snf.u))};

  // Exact re-verification of every promise; failures are library bugs.
  Int d1 = determinant(out.h1), d2 = determinant(out.h2);
  if ((d1 != 1 && d1 != -1) || (d2 != 1 && d2 != -1))
    throw std::logic_error("claim_factor: factor determinants are not +-1");
  if (mat_mul(out.h2, c) != mat_mul(c, out.h1))
    throw std::logic_error("claim_factor: factors do not intertwine c");
  if (!is_identity_mod(mat_mul(g.a1, out.h1), t_hat_value))
    throw std::logic_error("claim_factor: g1*h1 is not the identity mod t_hat");
  if (!is_identity_mod(mat_mul(out.h2, g.a2), t_hat_value))
    throw std::logic_error("claim_factor: h2*g2 is not the identity mod t_hat");
  return out;
}

// Subgroup of determinant tuples realized by T' members in one degree.
// arity = number of unit coordinates (0, 1 or 2); generators are tuples of
// residues mod t_hat; group is the abstract structure of the subgroup.
struct DetSubgroup {
  int arity = 0;
  std::vector<std::vector<Int>> generators;
  FinAbGroup group;
};

// Characterization by case split on the degree shape:
//   both ranks zero            -> trivial (arity 0);
//   one rank zero              -> full unit group on the live side (arity 1);
//   square c with nonzero det  -> dets are equal: the diagonal copy (arity 2);
//   anything else              -> all of (units)^2 (arity 2): a spare free
//                                 index on one side absorbs an integer
//                                 rep of the inverse, so the two dets move
//                                 independently.
inline DetSubgroup realizable_det_subgroup(const std::optional<IntMatrix>& c,
                                           long rank_x, long rank_y,
                                           const Int& t_hat_value) {
  if (rank_x < 0 || rank_y < 0)
    throw std::invalid_argument("realizable_det_subgroup: negative rank");
  if (t_hat_value < 1)
    throw std::invalid_argument("realizable_det_subgroup: modulus must be >= 1");
  DetSubgroup out;
  if (rank_x == 0 && rank_y == 0) return out;

  UnitsPresentation units = units_group(t_hat_value);
  if (rank_x == 0 || rank_y == 0) {
    out.arity = 1;
    for (const Int& g : units.generators) out.generators.push_back({g});
    out.group = units.group;
    return out;
  }

  if (!c.has_value())
    throw std::invalid_argument(
        "realizable_det_subgroup: matrix required when both ranks are positive");
  if (c->rows() != static_cast<std::size_t>(rank_y) ||
      c->cols() != static_cast<std::size_t>(rank_x))
    throw std::invalid_argument("realizable_det_subgroup: matrix is " +
                                std::to_string(c->rows()) + "x" +
                                std::to_string(c->cols()) + ", expected " +
                                std::to_string(rank_y) + "x" +
                                std::to_string(rank_x));
  out.arity = 2;
  if (rank_x == rank_y && determinant(*c) != 0) {
    for (const Int& g : units.generators) out.generators.push_back({g, g});
    out.group = units.group;
    return out;
  }
  for (const Int& g : units.generators) out.generators.push_back({g, Int(1)});
  for (const Int& g : units.generators) out.generators.push_back({Int(1), g});
  std::vector<Int> doubled;
  for (const Int& d : units.group.invariant_factors) {
    doubled.push_back(d);
    doubled.push_back(d);
  }
  out.group = make_group(0, doubled);
  return out;
}

// Everything the genus computation produces for one map.
struct GenusReport {
  Int t_hat_value;
  int k = 0;
  FinAbGroup upper_bound;  // (units mod +-1)^k in invariant-factor layout
  std::vector<std::vector<Int>> image_generators;  // coords in upper_bound
  FinAbGroup genus;
};

// Upper-bound group [(Z/t_hat)^*/{+-1}]^k modulo the images of the supplied
// self-map determinant tuples. Coordinate layout of the upper bound: factor
// j of the quotient group contributes k consecutive slots (one per unit
// coordinate), keeping the invariant-factor chain intact.
inline GenusReport genus_group(const MapModel& m,
                               const std::vector<std::vector<Int>>& selfmap_images) {
  GenusReport rep;
  rep.t_hat_value = t_hat(m);
  rep.k = k_of(m);
  UnitsModPm1 pm1 = units_mod_pm1(rep.t_hat_value);
  const std::size_t nf = pm1.group.invariant_factors.size();
  const std::size_t kk = static_cast<std::size_t>(rep.k);

  std::vector<Int> factors;
  for (std::size_t j = 0; j < nf; ++j)
    for (std::size_t cpy = 0; cpy < kk; ++cpy)
      factors.push_back(pm1.group.invariant_factors[j]);
  rep.upper_bound = make_group(0, factors);

  for (std::size_t gi = 0; gi < selfmap_images.size(); ++gi) {
    const auto& tuple = selfmap_images[gi];
    if (tuple.size() != kk)
      throw std::invalid_argument("genus_group: self-map image " +
                                  std::to_string(gi) + " has " +
                                  std::to_string(tuple.size()) +
                                  " coordinates, expected " + std::to_string(kk));
    std::vector<Int> coords(nf * kk, 0);
    for (std::size_t cpy = 0; cpy < kk; ++cpy) {
      std::vector<Int> proj;
      try {
        proj = pm1.project(tuple[cpy]);
      } catch (const std::domain_error& e) {
        throw std::domain_error("genus_group: self-map image " +
                                std::to_string(gi) + ", coordinate " +
                                std::to_string(cpy) + ": " + e.what());
      }
      for (std::size_t j = 0; j < nf; ++j) coords[j * kk + cpy] = proj[j];
    }
    rep.image_generators.push_back(std::move(coords));
  }
  rep.genus = quotient_by(rep.upper_bound, rep.image_generators);
  return rep;
}

}  // namespace mislin

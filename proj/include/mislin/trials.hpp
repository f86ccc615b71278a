#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "mislin/genus.hpp"
#include "mislin/int_matrix.hpp"
#include "mislin/numth.hpp"
#include "mislin/smith.hpp"

namespace mislin {

// Raw-engine draw in [lo, hi]. std::uniform_int_distribution output is
// implementation-defined, so seeds would not reproduce across platforms;
// plain modulo keeps runs bit-stable (the slight bias is irrelevant here).
inline long rand_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// Some residue coprime to t, as a small positive integer.
inline Int random_unit_rep(std::mt19937_64& rng, const Int& t) {
  if (t <= 1) return 1;
  for (int tries = 0; tries < 4096; ++tries) {
    Int v = mod_canon(Int(static_cast<unsigned long>(rng())), t);
    if (v != 0 && coprime(v, t)) return v;
  }
  return 1;  // unreachable for t >= 2, but keep the function total
}

// Random member of T' with both dets = 1 (mod t_hat) and linked-block
// determinant = +-1 (mod t_hat), i.e. inside the class claim_factor can
// handle. Built as a product of atomic T' members in diagonal coordinates,
// then det-corrected and conjugated back. Atomics:
//   - paired transvections on linked indices (multiplier divisible by the
//     chain ratio, mirrored through diag(c));
//   - paired diagonals on linked indices with det = +-1 (unit/inverse pairs,
//     or +-1-residue singles with varied integer reps);
//   - one-sided transvections and unit diagonals on free indices.
inline MatrixPair random_constructible_pair(const IntMatrix& c, const Int& th,
                                            std::mt19937_64& rng) {
  if (th < 1) throw std::invalid_argument("random_constructible_pair: modulus must be >= 1");
  SnfDecomposition snf = smith_normal_form(c);
  const std::size_t r1 = c.cols(), r2 = c.rows();
  std::vector<Int> cvec;
  for (std::size_t i = 0; i < std::min(r1, r2); ++i)
    if (snf.d(i, i) != 0) cvec.push_back(snf.d(i, i));
  const std::size_t s = cvec.size();

  IntMatrix b1 = IntMatrix::identity(r1), b2 = IntMatrix::identity(r2);
  auto apply = [&](const IntMatrix& e1, const IntMatrix& e2) {
    b1 = mat_mul(b1, e1);
    b2 = mat_mul(b2, e2);
  };
  auto diag1 = [&](std::size_t i, const Int& v) {
    IntMatrix e = IntMatrix::identity(r1);
    e(i, i) = v;
    return e;
  };
  auto diag2 = [&](std::size_t i, const Int& v) {
    IntMatrix e = IntMatrix::identity(r2);
    e(i, i) = v;
    return e;
  };
  auto sign_rep = [&](std::mt19937_64& r) {
    // Integer = +-1 (mod th) but rarely equal to +-1, so linked blocks stay
    // interesting.
    Int v = (rand_range(r, 0, 1) ? 1 : -1) + th * rand_range(r, -1, 1);
    return v == 0 ? Int(1) : v;
  };

  enum Kind { paired_trans, paired_diag, x_trans, x_diag, y_trans, y_diag };
  std::vector<Kind> kinds;
  if (s >= 2) kinds.push_back(paired_trans);
  if (s >= 1) kinds.push_back(paired_diag);
  if (r1 > s && r1 >= 2) kinds.push_back(x_trans);
  if (r1 > s) kinds.push_back(x_diag);
  if (r2 > s && r2 >= 2) kinds.push_back(y_trans);
  if (r2 > s) kinds.push_back(y_diag);

  const int steps = static_cast<int>(rand_range(rng, 6, 14));
  for (int step = 0; step < steps && !kinds.empty(); ++step) {
    switch (kinds[rand_range(rng, 0, static_cast<long>(kinds.size()) - 1)]) {
      case paired_trans: {
        std::size_t i = rand_range(rng, 0, static_cast<long>(s) - 1);
        std::size_t j = rand_range(rng, 0, static_cast<long>(s) - 2);
        if (j >= i) ++j;
        Int dij = detail::pattern_div(cvec, i, j);
        Int x = dij * rand_range(rng, -3, 3);
        IntMatrix e1 = IntMatrix::identity(r1);
        e1(i, j) = x;
        IntMatrix e2 = IntMatrix::identity(r2);
        Int num = x * cvec[i];
        if (num % cvec[j] != 0)
          throw std::logic_error("random_constructible_pair: mirrored multiplier not integral");
        e2(i, j) = num / cvec[j];
        apply(e1, e2);
        break;
      }
      case paired_diag: {
        if (s >= 2 && rand_range(rng, 0, 1)) {
          std::size_t i = rand_range(rng, 0, static_cast<long>(s) - 1);
          std::size_t j = rand_range(rng, 0, static_cast<long>(s) - 2);
          if (j >= i) ++j;
          Int v = random_unit_rep(rng, th);
          Int vi = inverse_mod(v, th);
          IntMatrix e1 = diag1(i, v);
          e1(j, j) = vi;
          IntMatrix e2 = diag2(i, v);
          e2(j, j) = vi;
          apply(e1, e2);
        } else {
          std::size_t i = rand_range(rng, 0, static_cast<long>(s) - 1);
          Int v = sign_rep(rng);
          apply(diag1(i, v), diag2(i, v));
        }
        break;
      }
      case x_trans: {
        std::size_t i = rand_range(rng, static_cast<long>(s), static_cast<long>(r1) - 1);
        std::size_t j = rand_range(rng, 0, static_cast<long>(r1) - 2);
        if (j >= i) ++j;
        IntMatrix e1 = IntMatrix::identity(r1);
        e1(i, j) = rand_range(rng, -4, 4);
        apply(e1, IntMatrix::identity(r2));
        break;
      }
      case x_diag: {
        std::size_t i = rand_range(rng, static_cast<long>(s), static_cast<long>(r1) - 1);
        apply(diag1(i, random_unit_rep(rng, th)), IntMatrix::identity(r2));
        break;
      }
      case y_trans: {
        std::size_t j = rand_range(rng, static_cast<long>(s), static_cast<long>(r2) - 1);
        std::size_t i = rand_range(rng, 0, static_cast<long>(r2) - 2);
        if (i >= j) ++i;
        IntMatrix e2 = IntMatrix::identity(r2);
        e2(i, j) = rand_range(rng, -4, 4);
        apply(IntMatrix::identity(r1), e2);
        break;
      }
      case y_diag: {
        std::size_t j = rand_range(rng, static_cast<long>(s), static_cast<long>(r2) - 1);
        apply(IntMatrix::identity(r1), diag2(j, random_unit_rep(rng, th)));
        break;
      }
    }
  }

  // Determinant correction, order-sensitive: first flip the linked block to
  // the +1 class if needed (changes both sides), then absorb each side's
  // leftover unit into a free diagonal slot.
  if (s > 0) {
    IntMatrix p(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) p(i, j) = b1(i, j);
    if (mod_canon(determinant(p), th) != mod_canon(1, th)) {
      Int v = -1 + th * rand_range(rng, -1, 1);
      apply(diag1(0, v), diag2(0, v));
    }
  }
  if (r1 > s) {
    Int d1 = mod_canon(determinant(b1), th);
    apply(diag1(s, th == 1 ? Int(1) : inverse_mod(d1, th)), IntMatrix::identity(r2));
  }
  if (r2 > s) {
    Int d2 = mod_canon(determinant(b2), th);
    apply(IntMatrix::identity(r1), diag2(s, th == 1 ? Int(1) : inverse_mod(d2, th)));
  }

  MatrixPair out{
      mat_mul(snf.v, mat_mul(b1, unimodular_inverse(snf.v))),
      mat_mul(unimodular_inverse(snf.u), mat_mul(b2, snf.u))};

  if (!in_t_prime(out, c, th) ||
      mod_canon(determinant(out.a1), th) != mod_canon(1, th) ||
      mod_canon(determinant(out.a2), th) != mod_canon(1, th))
    throw std::logic_error("random_constructible_pair: generated pair is not admissible");
  return out;
}

// Independent re-check of everything claim_factor promises.
inline bool verify_claim_factors(const MatrixPair& g, const ClaimFactors& h,
                                 const IntMatrix& c, const Int& th) {
  Int d1 = determinant(h.h1), d2 = determinant(h.h2);
  if (d1 != 1 && d1 != -1) return false;
  if (d2 != 1 && d2 != -1) return false;
  if (mat_mul(h.h2, c) != mat_mul(c, h.h1)) return false;
  if (!is_identity_mod(mat_mul(g.a1, h.h1), th)) return false;
  if (!is_identity_mod(mat_mul(h.h2, g.a2), th)) return false;
  return true;
}

struct ClaimTrialStats {
  std::size_t trials = 0;
  std::size_t passes = 0;
};

inline ClaimTrialStats run_claim_trials(const IntMatrix& c, const Int& th,
                                        std::size_t n, std::mt19937_64& rng) {
  ClaimTrialStats stats;
  for (std::size_t i = 0; i < n; ++i) {
    ++stats.trials;
    MatrixPair g = random_constructible_pair(c, th, rng);
    ClaimFactors h = claim_factor(g, c, th);
    if (verify_claim_factors(g, h, c, th)) ++stats.passes;
  }
  return stats;
}

}  // namespace mislin

#pragma once

#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "mislin/int_matrix.hpp"
#include "mislin/numth.hpp"

namespace mislin {

// Integer lift of a modular special-linear matrix: given a square a with
// det(a) = 1 (mod m), returns r with det(r) = 1 over Z and r = a (mod m).
//
// Method: reduce a to the identity over Z/m using row transvections only
// (they exist in every SL_n(Z/m): elementary matrices generate it), then
// replay the inverse operations over Z starting from the identity. The
// recorded product L satisfies L*a = I (mod m) with L an exact product of
// integer transvections, so r := L^{-1} has det 1 and r = a (mod m).
inline IntMatrix sl_lift(const IntMatrix& a, const Int& m) {
  if (!a.is_square()) throw std::invalid_argument("sl_lift: matrix not square");
  if (m < 1) throw std::invalid_argument("sl_lift: modulus must be >= 1");
  const std::size_t n = a.rows();
  if (m == 1 || n == 0) return IntMatrix::identity(n);

  IntMatrix w = mat_mod(a, m);
  if (mod_canon(determinant(w), m) != 1)
    throw std::invalid_argument("sl_lift: determinant is " +
                                mod_canon(determinant(w), m).get_str() +
                                " mod " + m.get_str() + ", not 1");

  std::vector<std::tuple<std::size_t, std::size_t, Int>> ops;  // row_i += t*row_j
  auto apply = [&](std::size_t i, std::size_t j, const Int& t) {
    if (t == 0) return;
    for (std::size_t c = 0; c < n; ++c)
      w(i, c) = mod_canon(w(i, c) + t * w(j, c), m);
    ops.emplace_back(i, j, t);
  };

  const auto primes = factorize(m);
  for (std::size_t k = 0; k < n; ++k) {
    // Make the pivot a unit mod m. For each prime p | m some entry of
    // column k at row >= k is nonzero mod p (the trailing block stays
    // invertible mod p throughout). Pick the first such donor row per prime
    // and add each donor once with a CRT-combined multiplier that is 1 at
    // its primes and 0 at all others.
    std::vector<std::size_t> donor(primes.size(), n);
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      const Int& p = primes[pi].first;
      for (std::size_t i = k; i < n; ++i)
        if (w(i, k) % p != 0) {
          donor[pi] = i;
          break;
        }
      if (donor[pi] == n)
        throw std::logic_error("sl_lift: column unexpectedly singular mod " +
                               p.get_str());
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      bool needed = false;
      std::vector<std::pair<Int, Int>> sys;
      for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        Int pe = 1;
        for (unsigned x = 0; x < primes[pi].second; ++x) pe *= primes[pi].first;
        sys.emplace_back(donor[pi] == i ? 1 : 0, pe);
        if (donor[pi] == i) needed = true;
      }
      if (needed) apply(k, i, crt(sys));
    }

    // Clear the rest of column k with the pivot's inverse.
    Int u = inverse_mod(w(k, k), m);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w(i, k) == 0) continue;
      apply(i, k, mod_canon(-w(i, k) * u, m));
    }
  }

  // w is now diagonal with unit entries multiplying to 1. Sweep each excess
  // unit rightward with the classical 6-transvection identity
  // diag(a^{-1}, a) = w(1) * w(-a), w(x) = E12(x) E21(-x^{-1}) E12(x).
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Int av = w(k, k);
    if (av == 1) continue;
    Int av_inv = inverse_mod(av, m);
    apply(k, k + 1, mod_canon(-av, m));
    apply(k + 1, k, av_inv);
    apply(k, k + 1, mod_canon(-av, m));
    apply(k, k + 1, 1);
    apply(k + 1, k, m - 1);
    apply(k, k + 1, 1);
  }
  if (!is_identity_mod(w, m))
    throw std::logic_error("sl_lift: reduction did not reach the identity");

  // Replay inverse ops over Z, right-to-left.
  IntMatrix r = IntMatrix::identity(n);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const auto& [i, j, t] = *it;
    for (std::size_t c = 0; c < n; ++c) r(i, c) -= t * r(j, c);
  }

  if (determinant(r) != 1)
    throw std::logic_error("sl_lift: lifted determinant is not 1");
  if (!is_zero(mat_mod(mat_sub(r, mat_mod(a, m)), m)))
    throw std::logic_error("sl_lift: lift does not reduce to the input");
  return r;
}

// Unimodular integer lift of the modular inverse: returns h with
// a*h = h*a = I (mod m) and det(h) = +-1 over Z. Requires det(a) = +-1
// (mod m); the sign of det(h) matches that residue class.
inline IntMatrix lift_inverse_unimodular(const IntMatrix& a, const Int& m) {
  if (!a.is_square())
    throw std::invalid_argument("lift_inverse_unimodular: matrix not square");
  if (m < 1)
    throw std::invalid_argument("lift_inverse_unimodular: modulus must be >= 1");
  const std::size_t n = a.rows();
  if (m == 1) return IntMatrix::identity(n);

  Int det = mod_canon(determinant(a), m);
  // Modular inverse: u*adj(a) with u = det^{-1} mod m.
  Int u = inverse_mod(det, m);  // throws if det is not a unit
  IntMatrix y = mat_mod(mat_scale(u, adjugate(a)), m);

  if (det == mod_canon(1, m)) return sl_lift(y, m);
  if (det == mod_canon(-1, m)) {
    // Flip one row's sign to land in SL, lift, flip back.
    IntMatrix f = IntMatrix::identity(n);
    if (n == 0)
      throw std::invalid_argument(
          "lift_inverse_unimodular: empty matrix cannot have det -1");
    f(0, 0) = -1;
    IntMatrix l = sl_lift(mat_mod(mat_mul(f, y), m), m);
    return mat_mul(f, l);
  }
  throw std::invalid_argument(
      "lift_inverse_unimodular: determinant is " + det.get_str() + " mod " +
      m.get_str() + ", not +-1");
}

}  // namespace mislin

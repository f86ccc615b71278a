#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mislin/int_matrix.hpp"

namespace mislin {

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool coprime(const Int& a, const Int& b) { return gcd(a, b) == 1; }

inline Int powmod(const Int& base, const Int& exp, const Int& m) {
  if (m < 1) throw std::invalid_argument("powmod: modulus must be >= 1");
  if (exp < 0) throw std::invalid_argument("powmod: negative exponent");
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Inverse of a mod m, in [0, m). Throws if gcd(a, m) != 1.
inline Int inverse_mod(const Int& a, const Int& m) {
  if (m < 1) throw std::invalid_argument("inverse_mod: modulus must be >= 1");
  if (m == 1) return 0;
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw std::domain_error("inverse_mod: " + mod_canon(a, m).get_str() +
                            " is not a unit mod " + m.get_str());
  return r;
}

// Trial-division factorization, ascending primes. n >= 1.
inline std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  std::vector<std::pair<Int, unsigned>> out;
  Int m = n;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (Int p = 5; p * p <= m; p += (p % 6 == 5) ? 2 : 4) strip(p);
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

// x = r_i (mod m_i) for pairwise coprime moduli; returns x in [0, prod m_i).
inline Int crt(const std::vector<std::pair<Int, Int>>& residues_moduli) {
  Int x = 0, m = 1;
  for (const auto& [r, mi] : residues_moduli) {
    if (mi < 1) throw std::invalid_argument("crt: modulus must be >= 1");
    // Solve x + m*k = r (mod mi).
    Int k = mod_canon((r - x) * inverse_mod(mod_canon(m, mi), mi), mi);
    x += m * k;
    m *= mi;
  }
  return mod_canon(x, m);
}

}  // namespace mislin

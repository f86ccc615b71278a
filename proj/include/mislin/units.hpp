#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mislin/abelian_group.hpp"
#include "mislin/int_matrix.hpp"
#include "mislin/numth.hpp"

namespace mislin {

// Multiplicative group (Z/t)^* in invariant-factor form, with one generator
// residue per factor and enough bookkeeping to take discrete logs.
//
// Construction: local structure per prime power (cyclic for odd p and 4,
// <-1> x <3> for 2^e with e >= 3), CRT-lift the local generators, split each
// cyclic piece into primary parts, and regroup the parts into a divisibility
// chain. Discrete logs run the same route backwards: exhaustive search
// inside each local component, then primary projection and CRT.
struct UnitsPresentation {
  struct LocalComponent {
    Int pe;                                // p^e
    bool two_split = false;                // 2^e, e >= 3
    std::vector<std::pair<Int, Int>> gens; // (local residue, order)
  };
  struct PrimaryPart {
    Int qa;                   // q^a dividing one component's order
    std::size_t comp = 0;     // local component index
    std::size_t gen_in_comp = 0;
    Int beta_inv;             // ((order of that gen)/qa)^{-1} mod qa
  };

  Int modulus = 1;
  FinAbGroup group;
  std::vector<Int> generators;
  std::vector<LocalComponent> comps;
  std::vector<std::vector<PrimaryPart>> parts_per_factor;
};

namespace detail {

// Smallest primitive root mod p^e, p odd prime.
inline Int primitive_root(const Int& p, unsigned e) {
  Int pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  Int phi = pe / p * (p - 1);
  auto phi_primes = factorize(phi);
  for (Int g = 2; g < pe; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (const auto& [q, a] : phi_primes) {
      (void)a;
      if (powmod(g, phi / q, pe) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found mod " + pe.get_str());
}

}  // namespace detail

inline UnitsPresentation units_group(const Int& t) {
  if (t < 1) throw std::invalid_argument("units_group: modulus must be >= 1");
  UnitsPresentation pres;
  pres.modulus = t;
  if (t <= 2) return pres;  // trivial group either way

  for (const auto& [p, e] : factorize(t)) {
    Int pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    UnitsPresentation::LocalComponent comp;
    comp.pe = pe;
    if (p == 2) {
      if (e == 1) continue;
      if (e == 2) {
        comp.gens = {{Int(3), Int(2)}};
      } else {
        comp.two_split = true;
        Int half = pe / 4;  // order of 3 mod 2^e
        comp.gens = {{pe - 1, Int(2)}, {Int(3), half}};
      }
    } else {
      Int phi = pe / p * (p - 1);
      comp.gens = {{detail::primitive_root(p, e), phi}};
    }
    pres.comps.push_back(std::move(comp));
  }

  // CRT-lift local generators to mod t and slice into primary parts.
  struct Part {
    Int q, qa;
    unsigned a;
    std::size_t comp, gen_in_comp;
    Int beta_inv;
    Int gen;  // residue mod t of order qa
  };
  std::vector<Part> parts;
  for (std::size_t c = 0; c < pres.comps.size(); ++c) {
    const auto& comp = pres.comps[c];
    for (std::size_t gi = 0; gi < comp.gens.size(); ++gi) {
      const auto& [g_loc, n] = comp.gens[gi];
      Int lift = crt({{g_loc, comp.pe}, {Int(1), t / comp.pe}});
      for (const auto& [q, a] : factorize(n)) {
        Part part;
        part.q = q;
        part.a = a;
        part.qa = 1;
        for (unsigned i = 0; i < a; ++i) part.qa *= q;
        part.comp = c;
        part.gen_in_comp = gi;
        part.beta_inv = inverse_mod(n / part.qa, part.qa);
        part.gen = powmod(lift, n / part.qa, t);
        parts.push_back(std::move(part));
      }
    }
  }

  // Bucket by prime, largest exponents first; slot i of the invariant-factor
  // chain (ascending) collects each bucket's (size - 1 - ...) entry so that
  // the largest factor absorbs every prime's largest part.
  std::vector<std::pair<Int, std::vector<Part>>> buckets;
  for (const auto& part : parts) {
    auto it = std::find_if(buckets.begin(), buckets.end(),
                           [&](const auto& b) { return b.first == part.q; });
    if (it == buckets.end()) {
      buckets.emplace_back(part.q, std::vector<Part>{part});
    } else {
      it->second.push_back(part);
    }
  }
  std::size_t r = 0;
  for (auto& [q, bucket] : buckets) {
    (void)q;
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const Part& x, const Part& y) { return x.a > y.a; });
    r = std::max(r, bucket.size());
  }

  std::vector<Int> factors;
  for (std::size_t i = 0; i < r; ++i) {
    Int d = 1, gen = 1;
    std::vector<UnitsPresentation::PrimaryPart> used;
    for (const auto& [q, bucket] : buckets) {
      (void)q;
      std::size_t idx = r - 1 - i;
      if (idx >= bucket.size()) continue;
      const Part& part = bucket[idx];
      d *= part.qa;
      gen = mod_canon(gen * part.gen, t);
      used.push_back({part.qa, part.comp, part.gen_in_comp, part.beta_inv});
    }
    factors.push_back(d);
    pres.generators.push_back(gen);
    pres.parts_per_factor.push_back(std::move(used));
  }
  pres.group = make_group(0, factors);

  // The factor product must be the unit count; anything else is a bug here.
  Int phi = 1;
  for (const auto& [p, e] : factorize(t)) {
    Int pe = 1;
    for (unsigned i = 0; i + 1 < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  if (pres.group.order() != phi)
    throw std::logic_error("units_group: invariant factors miss the totient");
  return pres;
}

// Exponent vector of u over the presentation's generators, coordinate i in
// [0, d_i). Throws domain_error if u is not a unit.
inline std::vector<Int> dlog(const UnitsPresentation& pres, const Int& u) {
  const Int& t = pres.modulus;
  Int uc = mod_canon(u, t);
  if (!coprime(uc, t))
    throw std::domain_error("dlog: " + uc.get_str() + " is not a unit mod " +
                            t.get_str());
  if (pres.group.invariant_factors.empty()) return {};

  // Local exponents by exhaustive search inside each component.
  std::vector<std::vector<Int>> local(pres.comps.size());
  for (std::size_t c = 0; c < pres.comps.size(); ++c) {
    const auto& comp = pres.comps[c];
    Int target = mod_canon(uc, comp.pe);
    if (!comp.two_split) {
      const auto& [g, n] = comp.gens[0];
      Int acc = 1, x = 0;
      while (x < n && acc != target) {
        acc = mod_canon(acc * g, comp.pe);
        ++x;
      }
      if (acc != target)
        throw std::logic_error("dlog: unit escaped cyclic component mod " +
                               comp.pe.get_str());
      local[c] = {x};
    } else {
      const Int& n2 = comp.gens[1].second;
      bool found = false;
      for (int s = 0; s < 2 && !found; ++s) {
        Int want = s ? mod_canon(target * (comp.pe - 1), comp.pe) : target;
        Int acc = 1, x = 0;
        while (x < n2 && acc != want) {
          acc = mod_canon(acc * 3, comp.pe);
          ++x;
        }
        if (acc == want) {
          local[c] = {Int(s), x};
          found = true;
        }
      }
      if (!found)
        throw std::logic_error("dlog: unit escaped split component mod " +
                               comp.pe.get_str());
    }
  }

  // Primary projection and CRT per invariant factor.
  std::vector<Int> coords;
  coords.reserve(pres.parts_per_factor.size());
  for (const auto& used : pres.parts_per_factor) {
    std::vector<std::pair<Int, Int>> sys;
    for (const auto& part : used) {
      Int x = local[part.comp][part.gen_in_comp];
      sys.emplace_back(mod_canon(x * part.beta_inv, part.qa), part.qa);
    }
    coords.push_back(crt(sys));
  }
  return coords;
}

// (Z/t)^* / {+-1}, with the projection of unit residues to quotient
// coordinates. For t <= 2 the quotient is trivial and projections are empty.
struct UnitsModPm1 {
  Int modulus = 1;
  UnitsPresentation units;
  QuotientMap qm;
  FinAbGroup group;

  std::vector<Int> project(const Int& u) const {
    Int uc = mod_canon(u, modulus);
    if (!coprime(uc, modulus))
      throw std::domain_error("project: " + uc.get_str() +
                              " is not a unit mod " + modulus.get_str());
    if (modulus <= 2) return {};
    return qm.project(dlog(units, uc));
  }
};

inline UnitsModPm1 units_mod_pm1(const Int& t) {
  UnitsModPm1 r;
  r.modulus = t;
  r.units = units_group(t);
  if (t <= 2) {
    r.qm = quotient_with_map(r.units.group, {});
    r.group = r.qm.group;
    return r;
  }
  r.qm = quotient_with_map(r.units.group, {dlog(r.units, t - 1)});
  r.group = r.qm.group;
  return r;
}

}  // namespace mislin

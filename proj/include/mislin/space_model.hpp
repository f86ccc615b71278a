#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mislin/int_matrix.hpp"

namespace mislin {

// Which structured-map category the computation runs in. The numeric
// pipeline is identical for both; the tag exists so inputs declare their
// setting and mixed inputs are rejected.
enum class Flavor { h_space, co_h_space };

inline std::string to_string(Flavor f) {
  return f == Flavor::h_space ? "H" : "coH";
}

// Per-degree data of a localization-ready finite complex: the free rank in
// this degree plus the exponents of the kernel / cokernel of the
// degree-n structure comparison and of the torsion subgroup. Exponents are
// >= 1; 1 means the corresponding group is trivial.
struct DegreeData {
  int degree = 0;
  long rank = 0;
  Int ker_exp = 1;
  Int coker_exp = 1;
  Int torsion_exp = 1;
};

struct SpaceModel {
  Flavor flavor = Flavor::h_space;
  std::map<int, DegreeData> degrees;  // only explicitly given degrees

  long rank(int n) const {
    auto it = degrees.find(n);
    return it == degrees.end() ? 0 : it->second.rank;
  }
  Int ker_exp(int n) const {
    auto it = degrees.find(n);
    return it == degrees.end() ? Int(1) : it->second.ker_exp;
  }
  Int coker_exp(int n) const {
    auto it = degrees.find(n);
    return it == degrees.end() ? Int(1) : it->second.coker_exp;
  }
  Int torsion_exp(int n) const {
    auto it = degrees.find(n);
    return it == degrees.end() ? Int(1) : it->second.torsion_exp;
  }
  int top_degree() const {
    return degrees.empty() ? 0 : degrees.rbegin()->first;
  }
};

inline SpaceModel make_space(Flavor flavor, const std::vector<DegreeData>& data) {
  SpaceModel s;
  s.flavor = flavor;
  for (const DegreeData& d : data) {
    if (d.degree < 1)
      throw std::invalid_argument("make_space: degree " +
                                  std::to_string(d.degree) + " is < 1");
    if (d.rank < 0)
      throw std::invalid_argument("make_space: negative rank in degree " +
                                  std::to_string(d.degree));
    if (d.ker_exp < 1 || d.coker_exp < 1 || d.torsion_exp < 1)
      throw std::invalid_argument("make_space: exponent < 1 in degree " +
                                  std::to_string(d.degree));
    if (!s.degrees.emplace(d.degree, d).second)
      throw std::invalid_argument("make_space: duplicate degree " +
                                  std::to_string(d.degree));
  }
  return s;
}

// A map f: X -> Y of the same flavor, with the induced degree-n matrices on
// free parts. c[n] has shape rank_Y(n) x rank_X(n) and is present exactly
// when both ranks are positive.
struct MapModel {
  SpaceModel x, y;
  std::map<int, IntMatrix> c;
};

inline MapModel make_map_model(const SpaceModel& x, const SpaceModel& y,
                               const std::map<int, IntMatrix>& c) {
  if (x.flavor != y.flavor)
    throw std::invalid_argument("make_map_model: mixed flavors " +
                                to_string(x.flavor) + " vs " + to_string(y.flavor));
  MapModel m{x, y, c};
  for (const auto& [n, mat] : c) {
    if (x.rank(n) == 0 || y.rank(n) == 0)
      throw std::invalid_argument(
          "make_map_model: matrix given in degree " + std::to_string(n) +
          " where a rank is zero");
    if (mat.rows() != static_cast<std::size_t>(y.rank(n)) ||
        mat.cols() != static_cast<std::size_t>(x.rank(n)))
      throw std::invalid_argument(
          "make_map_model: matrix in degree " + std::to_string(n) + " is " +
          std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
          ", expected " + std::to_string(y.rank(n)) + "x" +
          std::to_string(x.rank(n)));
  }
  for (const auto& [n, d] : x.degrees) {
    (void)d;
    if (x.rank(n) > 0 && y.rank(n) > 0 && !c.count(n))
      throw std::invalid_argument(
          "make_map_model: missing matrix in degree " + std::to_string(n) +
          " where both ranks are positive");
  }
  return m;
}

// Degrees mentioned by either space, ascending.
inline std::vector<int> active_degrees(const MapModel& m) {
  std::map<int, bool> seen;
  for (const auto& [n, d] : m.x.degrees) (void)d, seen[n] = true;
  for (const auto& [n, d] : m.y.degrees) (void)d, seen[n] = true;
  std::vector<int> out;
  for (const auto& [n, b] : seen) (void)b, out.push_back(n);
  return out;
}

// Degree-n factor of the self-equivalence bound: exponent of the cokernel
// one degree up times exponent of the kernel in this degree.
inline Int t_n(const SpaceModel& s, int n) { return s.coker_exp(n + 1) * s.ker_exp(n); }

// Product of t_n over all degrees up to the top of the complex.
inline Int t_total(const SpaceModel& s) {
  Int t = 1;
  for (int n = 1; n <= s.top_degree(); ++n) t *= t_n(s, n);
  return t;
}

// Torsion exponent where there is rational content, else 1.
inline Int s_n(const SpaceModel& s, int n) {
  return s.rank(n) > 0 ? s.torsion_exp(n) : Int(1);
}

// Combined modulus of the genus computation for a map:
// t(X) * t(Y)^2 * prod_n s_n(X) s_n(Y).
inline Int t_hat(const MapModel& m) {
  Int t = t_total(m.x) * t_total(m.y) * t_total(m.y);
  int top = std::max(m.x.top_degree(), m.y.top_degree());
  for (int n = 1; n <= top; ++n) t *= s_n(m.x, n) * s_n(m.y, n);
  return t;
}

// Number of degrees carrying rational content.
inline int l_count(const SpaceModel& s) {
  int l = 0;
  for (const auto& [n, d] : s.degrees) (void)n, l += d.rank > 0 ? 1 : 0;
  return l;
}

// Shape of a single degree's contribution to the unit-tuple count.
enum class DegreeKind {
  empty,    // both ranks zero
  x_only,   // rational content on X only
  y_only,   // rational content on Y only
  iso,      // square matrix with nonzero determinant: dets are locked together
  general,  // everything else: two independent det coordinates
};

inline DegreeKind degree_kind(const MapModel& m, int n) {
  long rx = m.x.rank(n), ry = m.y.rank(n);
  if (rx == 0 && ry == 0) return DegreeKind::empty;
  if (ry == 0) return DegreeKind::x_only;
  if (rx == 0) return DegreeKind::y_only;
  const IntMatrix& c = m.c.at(n);
  if (rx == ry && determinant(c) != 0) return DegreeKind::iso;
  return DegreeKind::general;
}

// How many independent unit coordinates the degree contributes.
inline int k_contribution(DegreeKind kind) {
  switch (kind) {
    case DegreeKind::empty: return 0;
    case DegreeKind::x_only: return 1;
    case DegreeKind::y_only: return 1;
    case DegreeKind::iso: return 1;
    case DegreeKind::general: return 2;
  }
  throw std::logic_error("k_contribution: unreachable");
}

// Total number of unit coordinates across all degrees.
inline int k_of(const MapModel& m) {
  int k = 0;
  for (int n : active_degrees(m)) k += k_contribution(degree_kind(m, n));
  return k;
}

}  // namespace mislin

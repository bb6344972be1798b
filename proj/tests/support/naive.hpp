#pragma once

// Independent from-definition oracles used by the unit and acceptance
// suites. Everything here works on raw bit patterns and plain vectors so
// these computations share no code path with the engine's cached
// implementations.

#include <cstdint>
#include <vector>

namespace naive {

using Bits = std::uint32_t;
using Family = std::vector<Bits>;

inline Bits full_mask(int n) { return static_cast<Bits>((1u << n) - 1u); }

inline bool family_has(const Family& f, Bits m) {
  for (Bits x : f)
    if (x == m) return true;
  return false;
}

inline Bits interior(const Family& opens, Bits a) {
  Bits acc = 0;
  for (Bits u : opens)
    if ((u & ~a) == 0) acc |= u;
  return acc;
}

// Intersection of all closed supersets.
inline Bits closure(const Family& opens, int n, Bits a) {
  Bits acc = full_mask(n);
  for (Bits u : opens) {
    const Bits closed = u ^ full_mask(n);
    if ((a & ~closed) == 0) acc &= closed;
  }
  return acc;
}

inline Family regular_open_family(const Family& opens, int n) {
  Family out;
  for (Bits m = 0; m <= full_mask(n); ++m)
    if (interior(opens, closure(opens, n, m)) == m) out.push_back(m);
  return out;
}

// Theorem form: x belongs when some open neighborhood U has int(cl(U))
// inside a.
inline Bits delta_interior(const Family& opens, int n, Bits a) {
  Bits acc = 0;
  for (int x = 0; x < n; ++x) {
    const Bits px = Bits{1} << x;
    for (Bits u : opens) {
      if ((u & px) && (interior(opens, closure(opens, n, u)) & ~a) == 0) {
        acc |= px;
        break;
      }
    }
  }
  return acc;
}

// Intersection of all regular closed supersets.
inline Bits delta_closure(const Family& opens, int n, Bits a) {
  Bits acc = full_mask(n);
  for (Bits ro : regular_open_family(opens, n)) {
    const Bits rc = ro ^ full_mask(n);
    if ((a & ~rc) == 0) acc &= rc;
  }
  return acc;
}

inline Family delta_open_family(const Family& opens, int n) {
  Family out;
  for (Bits m = 0; m <= full_mask(n); ++m)
    if (delta_interior(opens, n, m) == m) out.push_back(m);
  return out;
}

// Pointwise evaluation of the diamond condition over a neighborhood family,
// with linear membership scans over the primal.
inline Bits diamond_over(const Family& neighborhoods, const Family& primal, int n, Bits a) {
  const Bits ac = a ^ full_mask(n);
  Bits result = 0;
  for (int x = 0; x < n; ++x) {
    const Bits px = Bits{1} << x;
    bool all = true;
    for (Bits u : neighborhoods) {
      if (!(u & px)) continue;
      if (!family_has(primal, ac | (u ^ full_mask(n)))) {
        all = false;
        break;
      }
    }
    if (all) result |= px;
  }
  return result;
}

inline Bits diamond(const Family& opens, const Family& primal, int n, Bits a) {
  return diamond_over(opens, primal, n, a);
}

inline Bits diamond_r(const Family& opens, const Family& primal, int n, Bits a) {
  return diamond_over(regular_open_family(opens, n), primal, n, a);
}

inline bool is_topology(const Family& f, int n) {
  if (!family_has(f, 0) || !family_has(f, full_mask(n))) return false;
  for (Bits a : f)
    for (Bits b : f)
      if (!family_has(f, a | b) || !family_has(f, a & b)) return false;
  return true;
}

inline bool is_primal(const Family& f, int n) {
  if (family_has(f, full_mask(n))) return false;
  for (Bits a : f)
    for (Bits b = 0; b <= a; ++b)
      if ((b & ~a) == 0 && !family_has(f, b)) return false;
  for (Bits a = 0; a <= full_mask(n); ++a)
    for (Bits b = 0; b <= full_mask(n); ++b)
      if (family_has(f, a & b) && !family_has(f, a) && !family_has(f, b)) return false;
  return true;
}

}  // namespace naive

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "padic_orbits/errors.hpp"
#include "padic_orbits/padic_int.hpp"

namespace padic_orbits {

/// Tail length m and cycle length n of a critical orbit at some level:
/// the minimal pair with f^{m+n}(0) = f^m(0).
struct OrbitType {
  int tail = 0;   // m
  int cycle = 1;  // n
  friend bool operator==(const OrbitType&, const OrbitType&) = default;
  friend bool operator<(const OrbitType& a, const OrbitType& b) {
    return std::pair(a.tail, a.cycle) < std::pair(b.tail, b.cycle);
  }
  std::string str() const {
    return "(" + std::to_string(tail) + "," + std::to_string(cycle) + ")";
  }
};

/// The critical orbit of z^2 + c reduced mod p^level, recorded up to and
/// including the first repeated residue.  sequence has m + n + 1 entries,
/// the last equal to sequence[m].
struct OrbitRecord {
  unsigned long p = 0;
  int level = 0;
  mpz_class c;  // residue mod p^level
  std::vector<mpz_class> sequence;
  OrbitType type;

  /// The cycle part sequence[m .. m+n-1].
  std::vector<mpz_class> cycle_points() const;
};

/// Orbit types per level, k = 1..k_max.  The tail entries are
/// non-decreasing and each cycle length divides the next.
struct LevelProfile {
  unsigned long p = 0;
  mpz_class c;  // residue at the precision it was supplied
  int c_precision = 0;
  std::vector<std::pair<int, OrbitType>> entries;

  const OrbitType& at(int k) const { return entries.at(k - 1).second; }
  int k_max() const { return static_cast<int>(entries.size()); }
};

enum class OrbitClass {
  PeriodicExact,
  PreperiodicFinite,
  InfiniteTailGrowth,
  InfiniteCycleGrowth,
  Inconclusive,
};

/// Verdict on the critical orbit from a finite window of levels.  Finite
/// verdicts carry a resolution level and a certification flag: certified
/// means the defining relation vanishes at the full working precision and
/// the stable window extends at least three levels past resolution.
/// Uncertified finite verdicts are provisional.
struct Classification {
  OrbitClass kind = OrbitClass::Inconclusive;
  OrbitType type;       // stable type for finite kinds; last observed otherwise
  int resolved_at = 0;  // finite kinds only
  bool certified = false;
  LevelProfile profile;  // the evidence window

  int window() const { return profile.k_max(); }
  bool finite() const {
    return kind == OrbitClass::PeriodicExact ||
           kind == OrbitClass::PreperiodicFinite;
  }
  std::string kind_str() const;
};

/// Derivative of f^n along the recorded cycle, i.e. the product of 2 z over
/// the cycle points, together with the multiplicative order of its mod-p
/// reduction in F_p^*.  A multiplier divisible by p has no order; the order
/// field is empty then (superattracting case).
struct CycleMultiplier {
  PAdicInt multiplier;
  std::optional<int> order;
};

/// The degree-one reduction g(z) = a z + b of a rescaled iterate at a
/// vertex away from the critical residue class.
struct LocalAffineMap {
  unsigned long a = 0;
  unsigned long b = 0;
};

/// Iterates z <- z^2 + c mod p^level from 0 until the first repeat.
/// level must not exceed the precision of c.
OrbitRecord orbit_mod(const PAdicInt& c, int level);

/// orbit_mod at every level 1..k_max, with the monotonicity and
/// divisibility invariants checked (internal_inconsistency on violation).
LevelProfile level_profile(const PAdicInt& c, int k_max);

/// Applies the classification rules over a window of k_max levels
/// (k_max >= 3).  Never certifies finite verdicts for p = 2.
Classification classify(const PAdicInt& c, int k_max);

/// classify with the default window: eight levels past the first
/// cycle-length change, capped by the precision of c.
Classification classify(const PAdicInt& c);

/// record must have reached a cycle (it always has) and c must match it.
CycleMultiplier cycle_multiplier(const PAdicInt& c, const OrbitRecord& record);

/// Local form of f^{n_iter} at the disk D(vertex, p^-level): evaluates the
/// rescaled iterate at 0 and 1 to read off g(z) = a z + b mod p.  Requires
/// f^{n_iter}(vertex) = vertex mod p^level and vertex a unit.
LocalAffineMap local_affine_map(const PAdicInt& c, const mpz_class& vertex,
                                int n_iter, int level);

/// True iff |f(a2) - f(a1)| = |a2 - a1| at the working precision.  Both
/// arguments must be units; p must be odd.
bool isometry_check(const PAdicInt& c, const PAdicInt& a1, const PAdicInt& a2);

}  // namespace padic_orbits

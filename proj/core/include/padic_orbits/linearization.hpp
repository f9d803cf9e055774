#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padic_orbits/orbit.hpp"
#include "padic_orbits/padic_int.hpp"

namespace padic_orbits {

/// Both fixed points of z^2 + c in Z_p, when the discriminant 1 - 4c has a
/// square root there.  For p = 3 and c = -2 mod 9, x_plus is the
/// distinguished root closest to 2.
struct FixedPoints {
  PAdicInt x_plus;
  PAdicInt x_minus;
};

enum class Gamma0Case { Trivial, Ultrametric, Indeterminate };

/// The quantities entering the linearization-radius lower bound: the least
/// m with |1 - lambda^m| < 1, the bracketing indices s and t against
/// R(s) = p^{-1/(p^{s-1}(p-1))}, and how |gamma0 - lambda^m| was resolved.
struct LinearizationParams {
  int m = 1;
  int s = 0;
  int t = 0;
  Gamma0Case gamma0_case = Gamma0Case::Trivial;
  mpq_class gamma0_distance_val;  // valuation of gamma0 - lambda^m
};

struct RadiusBound {
  RadiusExp radius;
  LinearizationParams params;
};

/// One verified level of a proximity report.
struct LevelVerdict {
  int level = 0;
  OrbitType expected;
  OrbitType got;
  bool pass = false;
};

/// Verification record for a parameter c = -2 + l 3^k + (seeded tail) in
/// Z_3: whether the second critical iterate lands inside the certified
/// linearization disk around the distinguished fixed point, and whether
/// the orbit type follows (2,1) up to level k and (2, 3^i) at level k+i.
struct C2Report {
  int k = 0;
  int l = 0;
  std::uint64_t tail_seed = 0;
  PAdicInt c;
  bool fixed_point_in_zp = false;
  std::optional<PAdicInt> fixed_point;
  std::optional<int> distance_val;  // valuation of f^2(0) - x when x exists
  RadiusExp radius;                 // certified lower bound, exponent 3/2
  bool in_disk_pass = false;        // distance exceeds the radius bound
  bool profile_pass = false;        // all level verdicts pass
  std::vector<LevelVerdict> verdicts;
};

struct Lemma54Row {
  int n = 0;
  bool claim1 = false;  // lambda^{3^{n-1}} = 1 mod 3^n
  bool claim2 = false;  // lambda^{3^{n-1}} != 1 mod 3^{n+1}
};

struct TranslationStep {
  int n = 0;              // combinatorial distance from the 0-branch
  unsigned long constant; // mod-3 translation constant, must be 1 or 2
};

/// Fixed points via the quadratic formula; empty when 1 - 4c has odd
/// valuation or a non-residue unit part (no Z_p fixed point).
std::optional<FixedPoints> fixed_points(const PAdicInt& c);

/// Lower bound on the linearization-disk radius around an indifferent
/// fixed point with multiplier lambda (|lambda| = 1, not a root of unity
/// at working precision).  All exponent arithmetic is exact rational.
RadiusBound radius_lower_bound(const PAdicInt& lambda);

/// Builds c = -2 + l 3^k + tail and verifies the proximity predictions.
/// tail_seed 0 means no tail; otherwise the tail digits are drawn from a
/// seeded generator up to the working precision.
C2Report verify_c2(int k, int l, std::uint64_t tail_seed, int i_max,
                   int precision);

/// Checks lambda^{3^{n-1}} = 1 mod 3^n and != 1 mod 3^{n+1} for
/// n = 1..n_max.  lambda must be 4 mod 9.
std::vector<Lemma54Row> lemma54_claims(const PAdicInt& lambda, int n_max);

/// Local translation constants of the iterates of z -> lambda z at
/// vertices combinatorial distance n from the 0-branch, n = 1..n_max.
/// Throws internal_inconsistency if a constant vanishes mod 3.
std::vector<TranslationStep> translation_cascade(const PAdicInt& lambda,
                                                 const PAdicInt& v, int n_max);

}  // namespace padic_orbits

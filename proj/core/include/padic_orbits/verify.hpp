#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic_orbits/linearization.hpp"
#include "padic_orbits/orbit.hpp"

namespace padic_orbits {

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCase> cases;

  int failures() const;
  bool pass() const { return failures() == 0; }
  std::string to_json(int indent = 2) const;
  std::string text() const;
};

/// Proximity verification grid near -2 in Z_3: for every k in
/// [k_lo, k_hi], l in {1,2} and the given number of seeded tails, the
/// level profile must show (2,1) through level k and (2,3^i) at level
/// k+i.  In-disk distances are reported per case as informational detail.
SuiteResult run_c2_suite(int k_lo, int k_hi, int i_max, int seeds_per_cell,
                         std::uint64_t seed);

/// Exploratory sweep of the same pipeline for the disk D(1,1/9) around
/// the other strictly pre-periodic parameter in Z_3; reports observed
/// profiles without asserting anything.
std::string explore_disk_one(int k_lo, int k_hi, int i_max, int precision);

/// Multiplicative-order claims for lambda = 4 mod 9 and the translation
/// cascade constants, over seeded samples.
SuiteResult run_lemma54_suite(int samples, int n_max, std::uint64_t seed);

/// Cycle-length discipline: certified parameters multiply their cycle at
/// most once by r | p-1 (r = 3 allowed when p = 3); sampled parameters
/// obey division and ratio constraints level by level.
SuiteResult run_pezda_suite(const std::vector<unsigned long>& primes,
                            int samples, int k_max, std::uint64_t seed);

/// Tail discipline and local isometry: tails never move for p >= 3 once
/// positive, never decrease otherwise; unit pairs in a common residue
/// class keep their distance under one iteration.
SuiteResult run_tail_suite(const std::vector<unsigned long>& primes,
                           int samples, int k_max, std::uint64_t seed);

/// Certified enumeration counts, hyperbolic-center bound and quadratic
/// residue condition, re-verification of every parameter.
SuiteResult run_counts_suite(const std::vector<unsigned long>& primes);

}  // namespace padic_orbits

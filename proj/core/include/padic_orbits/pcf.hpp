#pragma once

#include <cstddef>
#include <vector>

#include "padic_orbits/hensel.hpp"
#include "padic_orbits/orbit.hpp"
#include "padic_orbits/padic_int.hpp"

namespace padic_orbits {

/// A candidate finite critical orbit type: mod-p type (m, n1) together
/// with a cycle multiplication factor r, giving the Z_p type (m, r*n1).
/// r is 1, a divisor of p-1, or 3 when p = 3; the cycle can multiply at
/// most once.
struct OrbitTypeCandidate {
  int m = 0;
  int n1 = 1;
  int r = 1;
  OrbitType implied() const { return OrbitType{m, r * n1}; }
};

/// The relation G(c) = f_c^{m+N}(0) - f_c^m(0) cutting out parameters of
/// total orbit length m + N.  G and G' are evaluated by forward iteration
/// (z' <- 2 z z' + 1), never by expanding the degree-2^{m+N} polynomial.
struct CriticalRelation {
  int m = 0;
  int n_total = 1;  // N = r * n1

  FnValue eval(const mpz_class& c, const mpz_class& modulus) const;
  Differentiable as_function() const;
};

/// A root found by digit lifting; certified roots passed the Hensel
/// criterion v(G) > 2 v(G') and were finished by Newton iteration.
struct FoundRoot {
  PAdicInt c;
  bool certified = false;
  int certified_at_level = 0;  // level where the criterion first held
  int val_g = 0;               // clamped to the working precision
  int val_g_prime = 0;
};

enum class PcfKind { HyperbolicCenter, StrictlyPreperiodic };

struct HenselCertificate {
  int level = 0;
  int val_g = 0;
  int val_g_prime = 0;
};

/// A certified post-critically finite parameter.
struct PcfParameter {
  PAdicInt c;
  OrbitType type;
  PcfKind kind = PcfKind::StrictlyPreperiodic;
  int resolved_at = 1;
  HenselCertificate certificate;
};

struct CountBounds {
  mpz_class q_bound;        // sum of 2^{m+rn} over the candidate triples
  int hyperbolic_bound = 0; // (p-1)/2
};

/// All candidate triples for an odd prime: realizable mod-p orbit types
/// (computed by running the p critical orbits mod p) crossed with the
/// admissible multiplication factors.  Periodic types never multiply.
std::vector<OrbitTypeCandidate> candidate_types(unsigned long p);

/// Every c in Z_p with G(c) = 0 mod p^target_precision, by breadth-first
/// digit lifting with Newton finishing.  Throws frontier_overflow if the
/// frontier outgrows the cap.
std::vector<FoundRoot> find_roots(const CriticalRelation& relation,
                                  unsigned long p, int target_precision,
                                  std::size_t frontier_cap = 10000);

/// True iff the orbit type computed at the precision of c equals claimed
/// exactly; roots whose true tail is shorter or whose true cycle is a
/// proper divisor are rejected.
bool exactness_filter(const PAdicInt& c, OrbitType claimed);

/// All PCF parameters in Z_p for an odd prime, certified and sorted by
/// (kind, orbit type, residue).  precision 0 picks the default
/// 4 (m + N) + 8 over the largest candidate.
std::vector<PcfParameter> enumerate_pcf(unsigned long p, int precision = 0);

CountBounds count_bounds(unsigned long p);

/// The default certification precision for a prime.
int default_pcf_precision(unsigned long p);

}  // namespace padic_orbits

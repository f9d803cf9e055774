#include "padic_orbits/orbit.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace padic_orbits {

std::vector<mpz_class> OrbitRecord::cycle_points() const {
  return std::vector<mpz_class>(sequence.begin() + type.tail,
                                sequence.begin() + type.tail + type.cycle);
}

std::string Classification::kind_str() const {
  switch (kind) {
    case OrbitClass::PeriodicExact: return "periodic_exact";
    case OrbitClass::PreperiodicFinite: return "preperiodic_finite";
    case OrbitClass::InfiniteTailGrowth: return "infinite_tail_growth";
    case OrbitClass::InfiniteCycleGrowth: return "infinite_cycle_growth";
    case OrbitClass::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Fixed-width iteration when p^level fits comfortably in 64 bits; the
// square is taken in 128-bit to avoid overflow.
OrbitRecord orbit_mod_small(unsigned long p, int level, std::uint64_t modulus,
                            std::uint64_t c) {
  OrbitRecord rec;
  rec.p = p;
  rec.level = level;
  rec.c = mpz_class(static_cast<unsigned long>(c));

  std::vector<std::uint64_t> seq;
  std::uint64_t z = 0;
  int first = -1;

  if (modulus <= (1u << 22)) {
    std::vector<std::int32_t> seen(modulus, -1);
    for (int i = 0;; ++i) {
      if (seen[z] >= 0) {
        first = seen[z];
        break;
      }
      seen[z] = i;
      seq.push_back(z);
      z = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(z) * z + c) % modulus);
    }
  } else {
    std::unordered_map<std::uint64_t, int> seen;
    for (int i = 0;; ++i) {
      auto it = seen.find(z);
      if (it != seen.end()) {
        first = it->second;
        break;
      }
      seen.emplace(z, i);
      seq.push_back(z);
      z = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(z) * z + c) % modulus);
    }
  }

  rec.type.tail = first;
  rec.type.cycle = static_cast<int>(seq.size()) - first;
  seq.push_back(seq[first]);
  rec.sequence.reserve(seq.size());
  for (std::uint64_t v : seq) {
    rec.sequence.emplace_back(static_cast<unsigned long>(v));
  }
  return rec;
}

OrbitRecord orbit_mod_big(unsigned long p, int level, const mpz_class& modulus,
                          const mpz_class& c) {
  OrbitRecord rec;
  rec.p = p;
  rec.level = level;
  rec.c = c;

  std::map<mpz_class, int> seen;
  mpz_class z = 0;
  int first = -1;
  for (int i = 0;; ++i) {
    auto it = seen.find(z);
    if (it != seen.end()) {
      first = it->second;
      break;
    }
    seen.emplace(z, i);
    rec.sequence.push_back(z);
    z = (z * z + c) % modulus;
  }
  rec.type.tail = first;
  rec.type.cycle = static_cast<int>(rec.sequence.size()) - first;
  rec.sequence.push_back(rec.sequence[first]);
  return rec;
}

}  // namespace

OrbitRecord orbit_mod(const PAdicInt& c, int level) {
  if (level < 1 || level > c.precision()) {
    throw std::invalid_argument("orbit level " + std::to_string(level) +
                                " exceeds precision of c");
  }
  mpz_class modulus = pow_p(c.prime(), level);
  mpz_class cr = c.residue() % modulus;
  if (mpz_fits_ulong_p(modulus.get_mpz_t()) &&
      modulus < mpz_class("4611686018427387904")) {  // 2^62
    return orbit_mod_small(c.prime(), level, modulus.get_ui(), cr.get_ui());
  }
  return orbit_mod_big(c.prime(), level, modulus, cr);
}

LevelProfile level_profile(const PAdicInt& c, int k_max) {
  if (k_max < 1 || k_max > c.precision()) {
    throw std::invalid_argument("k_max out of range");
  }
  LevelProfile prof;
  prof.p = c.prime();
  prof.c = c.residue();
  prof.c_precision = c.precision();
  prof.entries.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    OrbitType t = orbit_mod(c, k).type;
    if (!prof.entries.empty()) {
      const OrbitType& prev = prof.entries.back().second;
      if (t.tail < prev.tail) {
        throw internal_inconsistency("tail length shrank from level " +
                                     std::to_string(k - 1) + " to " +
                                     std::to_string(k) + " for c = " +
                                     c.str());
      }
      if (t.cycle % prev.cycle != 0) {
        throw internal_inconsistency("cycle length " + std::to_string(t.cycle) +
                                     " at level " + std::to_string(k) +
                                     " is not a multiple of " +
                                     std::to_string(prev.cycle));
      }
      if (c.prime() >= 3 && prof.entries.front().second.tail > 0 &&
          t.tail != prof.entries.front().second.tail) {
        throw internal_inconsistency(
            "pre-periodic tail moved at level " + std::to_string(k) +
            " for p >= 3, which is impossible");
      }
    }
    prof.entries.emplace_back(k, t);
  }
  return prof;
}

namespace {

bool relation_holds_at_full_precision(const PAdicInt& c, OrbitType t) {
  mpz_class m = c.modulus();
  mpz_class z = 0;
  std::vector<mpz_class> iterates{z};
  for (int i = 0; i < t.tail + t.cycle; ++i) {
    z = (z * z + c.residue()) % m;
    iterates.push_back(z);
  }
  return iterates[t.tail + t.cycle] == iterates[t.tail];
}

}  // namespace

Classification classify(const PAdicInt& c, int k_max) {
  if (k_max < 3) throw std::invalid_argument("classify needs k_max >= 3");
  k_max = std::min(k_max, c.precision());
  if (k_max < 3) {
    throw std::invalid_argument("classify needs c at precision >= 3");
  }

  Classification cls;
  cls.profile = level_profile(c, k_max);
  const auto& e = cls.profile.entries;
  int w = static_cast<int>(e.size());

  int mult_count = 0;
  int tail_count = 0;
  for (int i = 1; i < w; ++i) {
    if (e[i].second.cycle > e[i - 1].second.cycle) ++mult_count;
    if (e[i].second.tail > e[i - 1].second.tail) ++tail_count;
  }
  int resolved = w;  // first level of the stable suffix
  while (resolved > 1 && e[resolved - 2].second == e[w - 1].second) {
    --resolved;
  }
  int suffix = w - resolved + 1;
  OrbitType final_type = e[w - 1].second;

  auto finite_verdict = [&]() {
    cls.type = final_type;
    cls.resolved_at = resolved;
    cls.kind = final_type.tail == 0 ? OrbitClass::PeriodicExact
                                    : OrbitClass::PreperiodicFinite;
    cls.certified = c.prime() >= 3 && tail_count == 0 && mult_count <= 1 &&
                    suffix >= 4 && relation_holds_at_full_precision(c, final_type);
  };

  if (c.prime() == 2) {
    // No structure theorems available; report the window as observed.
    if (suffix >= 3) {
      finite_verdict();
      cls.certified = false;
    } else if (mult_count >= 2 && tail_count == 0) {
      cls.kind = OrbitClass::InfiniteCycleGrowth;
      cls.type = final_type;
    } else if (tail_count >= 2 && mult_count == 0) {
      cls.kind = OrbitClass::InfiniteTailGrowth;
      cls.type = final_type;
    } else {
      cls.kind = OrbitClass::Inconclusive;
      cls.type = final_type;
    }
    return cls;
  }

  if (mult_count >= 2) {
    // A finite orbit multiplies its cycle length at most once.
    cls.kind = OrbitClass::InfiniteCycleGrowth;
    cls.type = final_type;
  } else if (tail_count >= 2) {
    cls.kind = OrbitClass::InfiniteTailGrowth;
    cls.type = final_type;
  } else if (suffix >= 3) {
    finite_verdict();
  } else {
    cls.kind = OrbitClass::Inconclusive;
    cls.type = final_type;
  }
  return cls;
}

Classification classify(const PAdicInt& c) {
  int first_change = 0;
  int probe = std::min(c.precision(), 12);
  LevelProfile prof = level_profile(c, probe);
  for (int i = 1; i < prof.k_max(); ++i) {
    if (prof.entries[i].second.cycle != prof.entries[i - 1].second.cycle) {
      first_change = i + 1;
      break;
    }
  }
  int k_max = first_change ? first_change + 8 : 9;
  k_max = std::min(k_max, c.precision());
  k_max = std::max(k_max, 3);
  return classify(c, k_max);
}

CycleMultiplier cycle_multiplier(const PAdicInt& c, const OrbitRecord& record) {
  mpz_class modulus = pow_p(record.p, record.level);
  if (c.prime() != record.p || c.residue() % modulus != record.c) {
    throw std::invalid_argument("orbit record does not belong to this c");
  }
  mpz_class mult = 1;
  for (const mpz_class& z : record.cycle_points()) {
    mult = (mult * 2 * z) % modulus;
  }
  PAdicInt m(record.p, record.level, mult);
  if (mult % record.p == 0) {
    return CycleMultiplier{m, std::nullopt};
  }
  return CycleMultiplier{m, multiplicative_order_mod_p(mult, record.p)};
}

LocalAffineMap local_affine_map(const PAdicInt& c, const mpz_class& vertex,
                                int n_iter, int level) {
  if (n_iter < 1) throw std::invalid_argument("n_iter must be >= 1");
  if (level < 1 || level + 1 > c.precision()) {
    throw std::invalid_argument("local map needs precision > level");
  }
  unsigned long p = c.prime();
  if (vertex % p == 0) {
    throw std::invalid_argument(
        "vertex lies in the critical residue class; local degree is 2 there");
  }
  mpz_class big = pow_p(p, level + 1);
  mpz_class step = pow_p(p, level);
  mpz_class cr = c.residue() % big;

  auto iterate = [&](mpz_class z) {
    for (int i = 0; i < n_iter; ++i) z = (z * z + cr) % big;
    return z;
  };

  mpz_class v = vertex % big;
  if (v < 0) v += big;
  mpz_class fv = iterate(v);
  if ((fv - v) % step != 0) {
    throw std::invalid_argument("vertex is not fixed by f^n at this level");
  }
  mpz_class g0 = ((fv - v) / step) % p;
  if (g0 < 0) g0 += p;
  mpz_class fv1 = iterate((v + step) % big);
  mpz_class g1 = (((fv1 - v) % big + big) % big / step) % p;
  mpz_class a = (g1 - g0) % p;
  if (a < 0) a += p;
  if (a == 0) {
    throw internal_inconsistency("local map degenerated to degree 0");
  }
  return LocalAffineMap{static_cast<unsigned long>(a.get_ui()),
                        static_cast<unsigned long>(g0.get_ui())};
}

bool isometry_check(const PAdicInt& c, const PAdicInt& a1, const PAdicInt& a2) {
  if (c.prime() == 2) throw std::domain_error("isometry check needs odd p");
  if (!a1.is_unit() || !a2.is_unit()) {
    throw std::domain_error("isometry check requires unit points");
  }
  PAdicInt f1 = a1 * a1 + c;
  PAdicInt f2 = a2 * a2 + c;
  return (f2 - f1).valuation() == (a2 - a1).valuation();
}

}  // namespace padic_orbits

#include "padic_orbits/pcf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "padic_orbits/errors.hpp"

namespace padic_orbits {

FnValue CriticalRelation::eval(const mpz_class& c, const mpz_class& modulus) const {
  mpz_class z = 0, dz = 0;  // f^0(0) and its c-derivative
  mpz_class zm = 0, dzm = 0;
  for (int i = 1; i <= m + n_total; ++i) {
    dz = (2 * z * dz + 1) % modulus;
    z = (z * z + c) % modulus;
    if (i == m) {
      zm = z;
      dzm = dz;
    }
  }
  FnValue out;
  out.value = (z - zm) % modulus;
  if (out.value < 0) out.value += modulus;
  out.derivative = (dz - dzm) % modulus;
  if (out.derivative < 0) out.derivative += modulus;
  return out;
}

Differentiable CriticalRelation::as_function() const {
  return [rel = *this](const mpz_class& z, const mpz_class& modulus) {
    return rel.eval(z, modulus);
  };
}

std::vector<OrbitTypeCandidate> candidate_types(unsigned long p) {
  if (p == 2) {
    throw std::domain_error(
        "candidate enumeration is not available for p = 2");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }

  // The p critical orbits mod p give the realizable level-1 types.
  std::set<std::pair<int, int>> realizable;
  for (unsigned long c0 = 0; c0 < p; ++c0) {
    OrbitType t = orbit_mod(PAdicInt(p, 1, mpz_class(c0)), 1).type;
    realizable.emplace(t.tail, t.cycle);
  }

  std::vector<int> factors;
  for (int r = 1; r <= static_cast<int>(p) - 1; ++r) {
    if ((static_cast<int>(p) - 1) % r == 0) factors.push_back(r);
  }
  if (p == 3) factors.push_back(3);

  std::vector<OrbitTypeCandidate> out;
  for (auto [m, n1] : realizable) {
    if (m == 0) {
      out.push_back({m, n1, 1});
      continue;
    }
    for (int r : factors) out.push_back({m, n1, r});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.m, a.n1, a.r) < std::tuple(b.m, b.n1, b.r);
  });
  return out;
}

namespace {

// Valuation of x as an integer representative, clamped to cap.
int val_clamped(const mpz_class& x, unsigned long p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  mpz_class r = x;
  while (v < cap && r % p == 0) {
    r /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::vector<FoundRoot> find_roots(const CriticalRelation& relation,
                                  unsigned long p, int target_precision,
                                  std::size_t frontier_cap) {
  if (p == 2) throw std::domain_error("root search requires an odd prime");
  if (target_precision < 1) {
    throw std::invalid_argument("target precision must be >= 1");
  }

  mpz_class work_mod = pow_p(p, target_precision);
  std::vector<FoundRoot> found;
  std::set<mpz_class> found_residues;

  std::vector<mpz_class> frontier;
  for (unsigned long c0 = 0; c0 < p; ++c0) {
    if (relation.eval(mpz_class(c0), work_mod).value % p == 0) {
      frontier.emplace_back(c0);
    }
  }

  for (int level = 1; level <= target_precision && !frontier.empty(); ++level) {
    mpz_class level_mod = pow_p(p, level);
    std::vector<mpz_class> next;
    for (const mpz_class& r : frontier) {
      FnValue fv = relation.eval(r, work_mod);
      int vg = val_clamped(fv.value, p, target_precision);
      int vgp = val_clamped(fv.derivative, p, target_precision);
      bool hensel = vg > 2 * vgp && vgp < level;
      if (hensel) {
        // Unique root in this residue class; Newton finishes it.
        mpz_class cur = r;
        for (int guard = 0; guard < 2 * target_precision + 8; ++guard) {
          FnValue step = relation.eval(cur, work_mod);
          if (step.value == 0) break;
          int sv = val_clamped(step.derivative, p, target_precision);
          mpz_class unit = step.derivative / pow_p(p, sv);
          mpz_class inv;
          mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), work_mod.get_mpz_t());
          mpz_class corr = (step.value / pow_p(p, sv)) * inv % work_mod;
          cur = (cur - corr) % work_mod;
          if (cur < 0) cur += work_mod;
        }
        if (relation.eval(cur, work_mod).value != 0) {
          throw internal_inconsistency(
              "Newton refinement failed on a Hensel-certified branch");
        }
        if (found_residues.insert(cur).second) {
          FoundRoot root{PAdicInt(p, target_precision, cur), true, level, vg,
                         vgp};
          found.push_back(std::move(root));
        }
        continue;
      }
      if (level == target_precision) {
        // Survived to full depth without certification.
        if (vg >= target_precision && found_residues.insert(r).second) {
          found.push_back({PAdicInt(p, target_precision, r), false, 0, vg, vgp});
        }
        continue;
      }
      for (unsigned long d = 0; d < p; ++d) {
        mpz_class child = r + d * level_mod;
        FnValue cf = relation.eval(child, work_mod);
        if (val_clamped(cf.value, p, level + 1) >= level + 1) {
          next.push_back(std::move(child));
        }
      }
    }
    if (next.size() > frontier_cap) {
      throw frontier_overflow(
          "digit-lifting frontier at level " + std::to_string(level + 1) +
          " has " + std::to_string(next.size()) + " residues (cap " +
          std::to_string(frontier_cap) + ") for relation (" +
          std::to_string(relation.m) + "," + std::to_string(relation.n_total) +
          ")");
    }
    frontier = std::move(next);
  }

  std::sort(found.begin(), found.end(), [](const FoundRoot& a,
                                           const FoundRoot& b) {
    return a.c.residue() < b.c.residue();
  });
  return found;
}

bool exactness_filter(const PAdicInt& c, OrbitType claimed) {
  OrbitType actual = orbit_mod(c, c.precision()).type;
  return actual == claimed;
}

int default_pcf_precision(unsigned long p) {
  int best = 0;
  for (const auto& cand : candidate_types(p)) {
    best = std::max(best, cand.m + cand.r * cand.n1);
  }
  return 4 * best + 8;
}

std::vector<PcfParameter> enumerate_pcf(unsigned long p, int precision) {
  auto candidates = candidate_types(p);  // rejects p = 2
  if (precision == 0) precision = default_pcf_precision(p);
  int max_len = 0;
  for (const auto& cand : candidates) {
    max_len = std::max(max_len, cand.m + cand.r * cand.n1);
  }
  if (precision < 2 * max_len) {
    throw std::invalid_argument("precision must be at least twice the "
                                "largest candidate orbit length");
  }

  std::vector<PcfParameter> out;
  std::set<mpz_class> residues;
  for (const auto& cand : candidates) {
    OrbitType claimed = cand.implied();
    CriticalRelation rel{cand.m, claimed.cycle};
    for (const FoundRoot& root : find_roots(rel, p, precision)) {
      if (!root.certified) continue;
      if (!exactness_filter(root.c, claimed)) continue;  // smaller true type
      if (!residues.insert(root.c.residue()).second) continue;

      PcfParameter param{root.c, claimed,
                         cand.m == 0 ? PcfKind::HyperbolicCenter
                                     : PcfKind::StrictlyPreperiodic,
                         1,
                         {root.certified_at_level, root.val_g,
                          root.val_g_prime}};
      LevelProfile prof = level_profile(root.c, root.c.precision());
      for (int k = prof.k_max(); k >= 1; --k) {
        if (prof.at(k) == claimed) {
          param.resolved_at = k;
        } else {
          break;
        }
      }
      out.push_back(std::move(param));
    }
  }

  std::sort(out.begin(), out.end(), [](const PcfParameter& a,
                                       const PcfParameter& b) {
    return std::tuple(a.kind, a.type, a.c.residue()) <
           std::tuple(b.kind, b.type, b.c.residue());
  });
  return out;
}

CountBounds count_bounds(unsigned long p) {
  CountBounds out;
  out.q_bound = 0;
  for (const auto& cand : candidate_types(p)) {
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2,
                  static_cast<unsigned long>(cand.m + cand.r * cand.n1));
    out.q_bound += term;
  }
  out.hyperbolic_bound = (static_cast<int>(p) - 1) / 2;
  return out;
}

}  // namespace padic_orbits

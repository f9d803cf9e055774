#include "padic_orbits/linearization.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "padic_orbits/errors.hpp"

namespace padic_orbits {

std::optional<FixedPoints> fixed_points(const PAdicInt& c) {
  unsigned long p = c.prime();
  if (p == 2) throw std::domain_error("fixed points require odd p");
  PAdicInt one = PAdicInt::from_integer(1, p, c.precision());
  PAdicInt disc = one - PAdicInt::from_integer(4, p, c.precision()) * c;

  PAdicInt root = disc;  // placeholder, replaced below
  try {
    root = disc.sqrt();
  } catch (const std::domain_error&) {
    return std::nullopt;  // odd valuation or non-residue unit part
  }

  int prec = root.precision();
  PAdicInt half = PAdicInt::from_integer(2, p, prec).invert_unit();
  PAdicInt one_t = PAdicInt::from_integer(1, p, prec);
  PAdicInt a = (one_t + root) * half;
  PAdicInt b = (one_t - root) * half;

  // For parameters near -2 in Z_3, x_plus is the branch nearest 2, the
  // fixed point the proximity analysis tracks (ties by smaller residue).
  bool near_minus_two = p == 3 && c.precision() >= 2 &&
                        (c.residue() + 2) % 9 == 0;
  if (near_minus_two) {
    PAdicInt two = PAdicInt::from_integer(2, p, prec);
    Valuation va = (a - two).valuation();
    Valuation vb = (b - two).valuation();
    bool a_first;
    if (va == vb) {
      a_first = a.residue() <= b.residue();
    } else if (!va.is_finite()) {
      a_first = true;
    } else if (!vb.is_finite()) {
      a_first = false;
    } else {
      a_first = va.value() > vb.value();
    }
    if (!a_first) std::swap(a, b);
  }
  return FixedPoints{a, b};
}

namespace {

// Exponent of R(s) = p^{-1/(p^{s-1}(p-1))} as an exact rational.
mpq_class r_exponent(unsigned long p, int s) {
  mpz_class denom;
  if (s == 0) {
    // p^{-1} factor moves to the numerator
    return mpq_class(mpz_class(p), mpz_class(p - 1));
  }
  denom = pow_p(p, s - 1) * (p - 1);
  return mpq_class(1, denom);
}

}  // namespace

RadiusBound radius_lower_bound(const PAdicInt& lambda) {
  unsigned long p = lambda.prime();
  if (!lambda.is_unit()) {
    throw std::domain_error("multiplier must be a unit");
  }

  int m = multiplicative_order_mod_p(lambda.residue(), p);

  // lambda^m at full precision
  PAdicInt lm = lambda;
  PAdicInt acc = PAdicInt::from_integer(1, p, lambda.precision());
  for (int i = 0; i < m; ++i) acc = acc * lambda;
  lm = acc;
  PAdicInt one = PAdicInt::from_integer(1, p, lambda.precision());
  Valuation v1 = (one - lm).valuation();
  if (!v1.is_finite()) {
    throw std::domain_error(
        "lambda is a root of unity at working precision; no linearization "
        "radius");
  }

  LinearizationParams params;
  params.m = m;
  mpq_class v1q(v1.value());

  // Find s with R(s) <= |1-lambda^m| < R(s+1), i.e.
  // exponent(R(s)) >= v1 > exponent(R(s+1)).
  int s = -1;
  for (int cand = 0; cand <= v1.value() + 2; ++cand) {
    if (r_exponent(p, cand) >= v1q && v1q > r_exponent(p, cand + 1)) {
      s = cand;
      break;
    }
  }
  if (s < 0) {
    throw std::domain_error(
        "|1-lambda^m| lies outside the certified radius-bound range");
  }
  params.s = s;

  mpq_class vgamma;
  if (s == 0) {
    params.gamma0_case = Gamma0Case::Trivial;
    vgamma = v1q;
  } else {
    // Candidates: gamma0 = 1, or a primitive p^j-th root of unity with
    // v(gamma0 - 1) = 1/(p^{j-1}(p-1)), resolved by the ultrametric rule
    // when the two valuations differ.
    mpq_class best = v1q;  // gamma0 = 1
    bool tie = false;
    for (int j = 1; j <= s; ++j) {
      mpq_class vroot = r_exponent(p, j);
      if (vroot == v1q) {
        tie = true;
        continue;
      }
      mpq_class resolved = std::min(vroot, v1q);
      if (resolved < best) best = resolved;
    }
    if (tie) {
      params.gamma0_case = Gamma0Case::Indeterminate;
      throw std::domain_error(
          "gamma0 distance has equal-valuation terms; the ultrametric "
          "shortcut cannot resolve it");
    }
    params.gamma0_case = Gamma0Case::Ultrametric;
    vgamma = best;
  }
  params.gamma0_distance_val = vgamma;

  // t with R(t) <= |gamma0 - lambda^m| < R(t+1).
  int t = -1;
  for (int cand = 0; cand <= v1.value() + 2; ++cand) {
    if (r_exponent(p, cand) >= vgamma && vgamma > r_exponent(p, cand + 1)) {
      t = cand;
      break;
    }
  }
  if (t < 0) {
    throw std::domain_error("gamma0 distance outside the bracketing range");
  }
  params.t = t;

  // Exponent of the radius, assembled exactly:
  //   R(s+1)^{1/m} * p^{-(s-t)/(m p^s)} * |1-l^m|^{s(p-1)/(mp)}
  //   * |gamma0-l^m|^{1/(m p^{s-t})}
  mpq_class e = r_exponent(p, s + 1) / m;
  e += mpq_class(s - t, 1) / (mpq_class(m) * mpq_class(pow_p(p, s)));
  e += v1q * mpq_class(static_cast<long>(s) * (p - 1), 1) /
       mpq_class(static_cast<long>(m) * static_cast<long>(p));
  e += vgamma / (mpq_class(m) * mpq_class(pow_p(p, s - t)));

  return RadiusBound{RadiusExp(e), params};
}

namespace {

PAdicInt build_c2_parameter(int k, int l, std::uint64_t tail_seed,
                            int precision) {
  mpz_class c = -2 + mpz_class(l) * pow_p(3, k);
  if (tail_seed != 0) {
    std::mt19937_64 eng(tail_seed);
    for (int j = k + 1; j < precision; ++j) {
      c += mpz_class(static_cast<unsigned long>(eng() % 3)) * pow_p(3, j);
    }
  }
  return PAdicInt(3, precision, c);
}

}  // namespace

C2Report verify_c2(int k, int l, std::uint64_t tail_seed, int i_max,
                   int precision) {
  if (k < 2) throw std::invalid_argument("proximity level k must be >= 2");
  if (l != 1 && l != 2) throw std::invalid_argument("leading digit must be 1 or 2");
  if (i_max < 1) throw std::invalid_argument("i_max must be >= 1");
  if (precision < k + i_max + 2) {
    throw std::invalid_argument("precision must be at least k + i_max + 2");
  }

  PAdicInt c = build_c2_parameter(k, l, tail_seed, precision);
  C2Report report{k, l, tail_seed, c, false, std::nullopt, std::nullopt,
                  RadiusExp(3, 2), false, false, {}};

  // f^2(0) and the distinguished fixed point.
  PAdicInt f2 = (c * c) + c;
  if (auto fp = fixed_points(c)) {
    report.fixed_point_in_zp = true;
    report.fixed_point = fp->x_plus;
    PAdicInt lambda = PAdicInt::from_integer(2, 3, fp->x_plus.precision()) *
                      fp->x_plus;
    try {
      report.radius = radius_lower_bound(lambda).radius;
    } catch (const std::domain_error&) {
      // Multiplier drifted outside the bound's domain (possible only at
      // k = 2); keep the reference radius from the center of the disk.
    }
    Valuation dv = (f2.truncate(fp->x_plus.precision()) - fp->x_plus).valuation();
    int v = dv.is_finite() ? dv.value() : dv.bound();
    report.distance_val = v;
    // In-disk comparison on exact exponents: distance p^{-v} <= p^{-e}.
    report.in_disk_pass = mpq_class(v) >= report.radius.exponent() &&
                          v >= 2;
  }

  LevelProfile prof = level_profile(c, k + i_max);
  mpz_class expected_cycle = 1;
  for (int j = 1; j <= k + i_max; ++j) {
    LevelVerdict verdict;
    verdict.level = j;
    if (j <= k) {
      verdict.expected = OrbitType{2, 1};
    } else {
      expected_cycle = pow_p(3, j - k);
      verdict.expected = OrbitType{2, static_cast<int>(expected_cycle.get_ui())};
    }
    verdict.got = prof.at(j);
    verdict.pass = verdict.got == verdict.expected;
    report.verdicts.push_back(verdict);
  }
  report.profile_pass =
      std::all_of(report.verdicts.begin(), report.verdicts.end(),
                  [](const LevelVerdict& v) { return v.pass; });
  return report;
}

std::vector<Lemma54Row> lemma54_claims(const PAdicInt& lambda, int n_max) {
  if (lambda.prime() != 3) {
    throw std::domain_error("the cubing-order claims live in Z_3");
  }
  if (lambda.residue() % 9 != 4) {
    throw std::domain_error("lambda must be 4 mod 9");
  }
  if (lambda.precision() < n_max + 2) {
    throw std::invalid_argument("precision insufficient for n_max");
  }

  std::vector<Lemma54Row> rows;
  mpz_class modulus = lambda.modulus();
  mpz_class power = lambda.residue();  // lambda^{3^{n-1}}
  for (int n = 1; n <= n_max; ++n) {
    Lemma54Row row;
    row.n = n;
    row.claim1 = (power - 1) % pow_p(3, n) == 0;
    row.claim2 = (power - 1) % pow_p(3, n + 1) != 0;
    rows.push_back(row);
    power = power * power % modulus * power % modulus;  // cube
  }
  return rows;
}

std::vector<TranslationStep> translation_cascade(const PAdicInt& lambda,
                                                 const PAdicInt& v, int n_max) {
  if (lambda.prime() != 3 || v.prime() != 3) {
    throw std::domain_error("the translation cascade lives in Z_3");
  }
  if (lambda.residue() % 9 != 4) {
    throw std::domain_error("lambda must be 4 mod 9");
  }
  Valuation jv = v.valuation();
  if (!jv.is_finite()) {
    throw std::invalid_argument("v must be nonzero at working precision");
  }
  int j = jv.value();
  if (lambda.precision() < n_max + 2 || v.precision() < j + n_max + 1) {
    throw std::invalid_argument("precision insufficient for n_max");
  }

  std::vector<TranslationStep> steps;
  mpz_class lam_mod = lambda.modulus();
  mpz_class power = lambda.residue();  // lambda^{3^{n-1}}
  for (int n = 1; n <= n_max; ++n) {
    // Local form of g^{3^{n-1}} at the level j+n vertex over v:
    // z -> lambda^{3^{n-1}} z + (lambda^{3^{n-1}} - 1) v / 3^{j+n}.
    mpz_class num = (power - 1) * v.residue();
    mpz_class scale = pow_p(3, j + n);
    if (num % scale != 0) {
      throw internal_inconsistency(
          "translation constant is not integral at distance " +
          std::to_string(n));
    }
    mpz_class constant = (num / scale) % 3;
    if (constant < 0) constant += 3;
    if (constant == 0) {
      throw internal_inconsistency(
          "translation constant vanished at distance " + std::to_string(n) +
          "; the cascade cannot be trivial");
    }
    steps.push_back({n, static_cast<unsigned long>(constant.get_ui())});
    power = power * power % lam_mod * power % lam_mod;
  }
  return steps;
}

}  // namespace padic_orbits

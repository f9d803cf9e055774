#include "padic_orbits/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "padic_orbits/errors.hpp"
#include "padic_orbits/pcf.hpp"
#include "padic_orbits/serialize.hpp"

namespace padic_orbits {

using nlohmann::json;

int SuiteResult::failures() const {
  int n = 0;
  for (const auto& c : cases) {
    if (!c.pass) ++n;
  }
  return n;
}

std::string SuiteResult::to_json(int indent) const {
  json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = suite;
  j["cases"] = json::array();
  for (const auto& c : cases) {
    j["cases"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["failures"] = failures();
  j["pass"] = pass();
  return j.dump(indent);
}

std::string SuiteResult::text() const {
  std::ostringstream os;
  for (const auto& c : cases) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << suite << ": " << (cases.size() - failures()) << "/" << cases.size()
     << " ok\n";
  return os.str();
}

namespace {

PAdicInt random_parameter(unsigned long p, int precision,
                          std::mt19937_64& eng) {
  mpz_class r = 0;
  for (int i = precision; i-- > 0;) {
    r = r * static_cast<unsigned long>(p) +
        static_cast<unsigned long>(eng() % p);
  }
  return PAdicInt(p, precision, r);
}

}  // namespace

SuiteResult run_c2_suite(int k_lo, int k_hi, int i_max, int seeds_per_cell,
                         std::uint64_t seed) {
  SuiteResult result;
  result.suite = "c2";
  std::mt19937_64 eng(seed);
  int precision = k_hi + i_max + 4;

  for (int k = k_lo; k <= k_hi; ++k) {
    for (int l = 1; l <= 2; ++l) {
      for (int s = 0; s <= seeds_per_cell; ++s) {
        std::uint64_t tail = s == 0 ? 0 : eng();
        C2Report rep = verify_c2(k, l, tail, i_max, precision);
        SuiteCase tc;
        std::ostringstream name;
        name << "profile k=" << k << " l=" << l << " tail="
             << (tail == 0 ? "none" : std::to_string(tail));
        tc.name = name.str();
        tc.pass = rep.profile_pass;
        std::ostringstream detail;
        if (rep.fixed_point_in_zp) {
          detail << "fixed point in Z_3, distance valuation "
                 << *rep.distance_val << ", in-disk "
                 << (rep.in_disk_pass ? "yes" : "no");
        } else {
          detail << "fixed point leaves Z_3 (discriminant not a square)";
        }
        tc.detail = detail.str();
        result.cases.push_back(std::move(tc));
      }
    }
  }
  return result;
}

std::string explore_disk_one(int k_lo, int k_hi, int i_max, int precision) {
  // The strictly pre-periodic parameter of type (2,3) lives in D(1,1/9);
  // sweep parameters that agree with it to level k and report the level
  // profiles without asserting a growth law.
  auto params = enumerate_pcf(3);
  mpz_class center;
  bool have = false;
  for (const auto& param : params) {
    if (param.type == OrbitType{2, 3}) {
      center = param.c.residue();
      have = true;
    }
  }
  std::ostringstream os;
  if (!have) {
    os << "no (2,3) parameter found\n";
    return os.str();
  }
  precision = std::max(precision, k_hi + i_max + 2);
  for (int k = std::max(2, k_lo); k <= k_hi; ++k) {
    for (int l = 1; l <= 2; ++l) {
      mpz_class base = center % pow_p(3, k);
      mpz_class c_res = base + mpz_class(l) * pow_p(3, k);
      PAdicInt c(3, precision, c_res);
      LevelProfile prof = level_profile(c, std::min(precision, k + i_max));
      os << "c = " << base.get_str() << " + " << l << "*3^" << k << ": ";
      for (const auto& [lvl, t] : prof.entries) {
        os << t.str() << (lvl < prof.k_max() ? " " : "");
      }
      os << "\n";
    }
  }
  return os.str();
}

SuiteResult run_lemma54_suite(int samples, int n_max, std::uint64_t seed) {
  SuiteResult result;
  result.suite = "lemma54";
  std::mt19937_64 eng(seed);
  int precision = n_max + 4;

  int claim_failures = 0;
  int constant_failures = 0;
  std::string first_bad;
  for (int s = 0; s < samples; ++s) {
    // lambda = 4 mod 9, not 4 mod 27, with seeded higher digits.
    mpz_class lam = 4 + (1 + mpz_class(eng() % 2)) * 27;
    for (int j = 4; j < precision; ++j) {
      lam += mpz_class(eng() % 3) * pow_p(3, j);
    }
    PAdicInt lambda(3, precision, lam);
    for (const auto& row : lemma54_claims(lambda, n_max)) {
      if (!row.claim1 || !row.claim2) {
        ++claim_failures;
        if (first_bad.empty()) {
          first_bad = "lambda=" + lam.get_str() + " n=" + std::to_string(row.n);
        }
      }
    }
    int j = 1 + static_cast<int>(eng() % 3);
    int n_cascade = std::min(n_max, 5);
    mpz_class vres = (1 + mpz_class(eng() % 2)) * pow_p(3, j);
    PAdicInt v(3, j + n_cascade + 2, vres);
    try {
      for (const auto& step : translation_cascade(lambda, v, n_cascade)) {
        if (step.constant != 1 && step.constant != 2) ++constant_failures;
      }
    } catch (const internal_inconsistency&) {
      ++constant_failures;
    }
  }

  result.cases.push_back(
      {"cubing-order claims (" + std::to_string(samples) + " samples, n<=" +
           std::to_string(n_max) + ")",
       claim_failures == 0,
       claim_failures == 0 ? "" : std::to_string(claim_failures) +
                                      " failures, first " + first_bad});
  result.cases.push_back(
      {"translation constants nonzero (" + std::to_string(samples) +
           " samples)",
       constant_failures == 0,
       constant_failures == 0 ? "" : std::to_string(constant_failures) +
                                         " failures"});
  return result;
}

SuiteResult run_pezda_suite(const std::vector<unsigned long>& primes,
                            int samples, int k_max, std::uint64_t seed) {
  SuiteResult result;
  result.suite = "pezda";
  std::mt19937_64 eng(seed);

  for (unsigned long p : primes) {
    if (p == 2) continue;
    auto divides_pm1 = [p](int r) {
      return r >= 1 && (static_cast<int>(p) - 1) % r == 0;
    };

    // Certified parameters: at most one multiplication, by an admissible
    // factor.
    int cert_failures = 0;
    auto params = enumerate_pcf(p);
    for (const auto& param : params) {
      LevelProfile prof =
          level_profile(param.c, std::min(param.c.precision(),
                                          param.resolved_at + 6));
      int mults = 0;
      bool bad_factor = false;
      for (int i = 1; i < prof.k_max(); ++i) {
        int a = prof.entries[i - 1].second.cycle;
        int b = prof.entries[i].second.cycle;
        if (b > a) {
          ++mults;
          int r = b / a;
          if (!(divides_pm1(r) || (p == 3 && r == 3))) bad_factor = true;
        }
      }
      if (mults > 1 || bad_factor) ++cert_failures;
    }
    result.cases.push_back(
        {"certified cycle multiplications p=" + std::to_string(p),
         cert_failures == 0,
         std::to_string(params.size()) + " parameters"});

    // Sampled parameters: every one-level cycle ratio is 1, a divisor of
    // p-1, or p.
    int ratio_failures = 0;
    for (int s = 0; s < samples; ++s) {
      PAdicInt c = random_parameter(p, k_max, eng);
      LevelProfile prof = level_profile(c, k_max);
      for (int i = 1; i < prof.k_max(); ++i) {
        int a = prof.entries[i - 1].second.cycle;
        int b = prof.entries[i].second.cycle;
        if (b % a != 0) {
          ++ratio_failures;
          continue;
        }
        int r = b / a;
        if (!(r == 1 || divides_pm1(r) || r == static_cast<int>(p))) {
          ++ratio_failures;
        }
      }
    }
    result.cases.push_back(
        {"sampled cycle ratios p=" + std::to_string(p) + " (" +
             std::to_string(samples) + " samples, k<=" +
             std::to_string(k_max) + ")",
         ratio_failures == 0,
         ratio_failures == 0 ? "" : std::to_string(ratio_failures) +
                                        " bad ratios"});
  }
  return result;
}

SuiteResult run_tail_suite(const std::vector<unsigned long>& primes,
                           int samples, int k_max, std::uint64_t seed) {
  SuiteResult result;
  result.suite = "tail";
  std::mt19937_64 eng(seed);

  for (unsigned long p : primes) {
    if (p == 2) continue;
    int tail_failures = 0;
    for (int s = 0; s < samples; ++s) {
      PAdicInt c = random_parameter(p, k_max, eng);
      LevelProfile prof;
      try {
        prof = level_profile(c, k_max);
      } catch (const internal_inconsistency&) {
        ++tail_failures;
        continue;
      }
      int m1 = prof.entries.front().second.tail;
      for (const auto& [k, t] : prof.entries) {
        if (m1 > 0 && t.tail != m1) ++tail_failures;
      }
    }
    result.cases.push_back(
        {"tail constancy p=" + std::to_string(p) + " (" +
             std::to_string(samples) + " samples, k<=" +
             std::to_string(k_max) + ")",
         tail_failures == 0,
         tail_failures == 0 ? "" : std::to_string(tail_failures) +
                                       " violations"});

    int iso_failures = 0;
    int prec = std::max(k_max, 6);
    for (int s = 0; s < samples; ++s) {
      PAdicInt c = random_parameter(p, prec, eng);
      // Unit pair in a common residue class mod p.
      mpz_class a1 = 1 + eng() % (p - 1);
      mpz_class offset = 0;
      for (int i = 1; i < prec; ++i) {
        a1 += mpz_class(eng() % p) * pow_p(p, i);
        offset += mpz_class(eng() % p) * pow_p(p, i);
      }
      PAdicInt alpha1(p, prec, a1);
      PAdicInt alpha2(p, prec, a1 + offset);
      if (!isometry_check(c, alpha1, alpha2)) ++iso_failures;
    }
    result.cases.push_back(
        {"local isometry p=" + std::to_string(p) + " (" +
             std::to_string(samples) + " unit pairs)",
         iso_failures == 0,
         iso_failures == 0 ? "" : std::to_string(iso_failures) + " failures"});
  }
  return result;
}

SuiteResult run_counts_suite(const std::vector<unsigned long>& primes) {
  SuiteResult result;
  result.suite = "counts";

  for (unsigned long p : primes) {
    if (p == 2) continue;
    auto params = enumerate_pcf(p);
    CountBounds bounds = count_bounds(p);

    std::map<unsigned long, int> expected{{3, 4}, {5, 7}, {7, 10}};
    SuiteCase count_case;
    count_case.name = "pcf count p=" + std::to_string(p);
    auto it = expected.find(p);
    if (it != expected.end()) {
      count_case.pass = static_cast<int>(params.size()) == it->second;
      count_case.detail = "got " + std::to_string(params.size()) +
                          ", expected " + std::to_string(it->second);
    } else {
      count_case.pass = mpz_class(params.size()) < bounds.q_bound;
      count_case.detail = "got " + std::to_string(params.size()) +
                          " (no certified reference count)";
    }
    result.cases.push_back(count_case);

    int hyper = 0;
    bool qr_ok = true;
    for (const auto& param : params) {
      if (param.kind != PcfKind::HyperbolicCenter) continue;
      mpz_class r = param.c.residue() % p;
      if (r != 0) ++hyper;
      mpz_class neg = (p - r.get_ui()) % p;
      bool square = false;
      for (unsigned long x = 0; x < p; ++x) {
        if (mpz_class(x) * x % p == neg) {
          square = true;
          break;
        }
      }
      if (!square) qr_ok = false;
    }
    result.cases.push_back({"hyperbolic centers p=" + std::to_string(p),
                            hyper <= bounds.hyperbolic_bound,
                            std::to_string(hyper) + " non-zero centers, bound " +
                                std::to_string(bounds.hyperbolic_bound)});
    result.cases.push_back({"-c quadratic residue p=" + std::to_string(p),
                            qr_ok, ""});

    int reverify_failures = 0;
    for (const auto& param : params) {
      Classification cls = classify(param.c, param.c.precision());
      if (!cls.finite() || cls.type != param.type || !cls.certified) {
        ++reverify_failures;
      }
    }
    result.cases.push_back(
        {"re-verification p=" + std::to_string(p), reverify_failures == 0,
         reverify_failures == 0 ? ""
                                : std::to_string(reverify_failures) +
                                      " parameters failed"});
  }
  return result;
}

}  // namespace padic_orbits

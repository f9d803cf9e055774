#include "padic_orbits/padic_int.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace padic_orbits {

int Valuation::value() const {
  if (at_least_) {
    throw std::logic_error("valuation is only bounded below, not exact");
  }
  return v_;
}

std::string Valuation::str() const {
  if (at_least_) return ">=" + std::to_string(v_);
  return std::to_string(v_);
}

RadiusExp::RadiusExp(mpq_class exponent) : exp_(std::move(exponent)) {
  exp_.canonicalize();
  if (exp_.get_den() < 1) {
    throw std::invalid_argument("radius exponent denominator must be >= 1");
  }
}

RadiusExp::RadiusExp(long num, long den) : RadiusExp(mpq_class(num, den)) {}

std::string RadiusExp::str() const {
  std::ostringstream os;
  os << "^(-" << exp_.get_num().get_str();
  if (exp_.get_den() != 1) os << "/" << exp_.get_den().get_str();
  os << ")";
  return os.str();
}

bool is_prime(unsigned long n) {
  mpz_class m(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
}

mpz_class pow_p(unsigned long p, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
  return r;
}

PAdicInt::PAdicInt(unsigned long p, int precision, const mpz_class& residue)
    : p_(p), precision_(precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  if (!is_prime(p)) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  }
  mpz_class m = pow_p(p, precision);
  mpz_mod(residue_.get_mpz_t(), residue.get_mpz_t(), m.get_mpz_t());
}

PAdicInt PAdicInt::from_integer(const mpz_class& n, unsigned long p,
                                int precision) {
  return PAdicInt(p, precision, n);
}

PAdicInt PAdicInt::from_digits(const std::string& digits, unsigned long p) {
  std::vector<unsigned long> ds;
  std::string token;
  std::istringstream in(digits);
  while (std::getline(in, token, '.')) {
    if (token.empty()) throw std::invalid_argument("empty digit in " + digits);
    std::size_t pos = 0;
    unsigned long d = std::stoul(token, &pos);
    if (pos != token.size() || d >= p) {
      throw std::invalid_argument("bad base-" + std::to_string(p) +
                                  " digit: " + token);
    }
    ds.push_back(d);
  }
  if (ds.empty()) throw std::invalid_argument("empty digit string");
  mpz_class r = 0;
  for (std::size_t i = ds.size(); i-- > 0;) {
    r = r * static_cast<unsigned long>(p) + ds[i];
  }
  return PAdicInt(p, static_cast<int>(ds.size()), r);
}

mpz_class PAdicInt::modulus() const { return pow_p(p_, precision_); }

std::string PAdicInt::digits() const {
  mpz_class r = residue_;
  std::ostringstream os;
  for (int i = 0; i < precision_; ++i) {
    if (i) os << '.';
    os << mpz_class(r % p_).get_str();
    r /= p_;
  }
  return os.str();
}

bool PAdicInt::is_unit() const { return residue_ % p_ != 0; }

Valuation PAdicInt::valuation() const {
  if (residue_ == 0) return Valuation::at_least(precision_);
  int v = 0;
  mpz_class r = residue_;
  while (r % p_ == 0) {
    r /= p_;
    ++v;
  }
  return Valuation::exact(v);
}

namespace {

void require_same_prime(const PAdicInt& a, const PAdicInt& b) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument("mixed primes: " + std::to_string(a.prime()) +
                                " vs " + std::to_string(b.prime()));
  }
}

}  // namespace

PAdicInt PAdicInt::operator-() const {
  return PAdicInt(p_, precision_, -residue_);
}

PAdicInt operator+(const PAdicInt& a, const PAdicInt& b) {
  require_same_prime(a, b);
  int k = std::min(a.precision(), b.precision());
  return PAdicInt(a.prime(), k, a.residue() + b.residue());
}

PAdicInt operator-(const PAdicInt& a, const PAdicInt& b) {
  require_same_prime(a, b);
  int k = std::min(a.precision(), b.precision());
  return PAdicInt(a.prime(), k, a.residue() - b.residue());
}

PAdicInt operator*(const PAdicInt& a, const PAdicInt& b) {
  require_same_prime(a, b);
  int k = std::min(a.precision(), b.precision());
  return PAdicInt(a.prime(), k, a.residue() * b.residue());
}

PAdicInt PAdicInt::invert_unit() const {
  if (!is_unit()) {
    throw std::domain_error("cannot invert non-unit " + str());
  }
  mpz_class m = modulus();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("inversion failed for " + str());
  }
  return PAdicInt(p_, precision_, inv);
}

int multiplicative_order_mod_p(const mpz_class& a, unsigned long p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  if (r == 0) throw std::domain_error("order of 0 mod p is undefined");
  unsigned long x = r.get_ui();
  unsigned long cur = x % p;
  for (int e = 1; e < static_cast<int>(p); ++e) {
    if (cur == 1) return e;
    cur = static_cast<unsigned long>(
        (static_cast<unsigned long long>(cur) * x) % p);
  }
  throw std::logic_error("unit has no order mod p; p cannot be prime");
}

unsigned long sqrt_mod_p(unsigned long a, unsigned long p) {
  a %= p;
  if (p == 2) throw std::domain_error("sqrt_mod_p requires odd p");
  if (a == 0) return 0;
  auto mulmod = [p](unsigned long x, unsigned long y) {
    return static_cast<unsigned long>(
        (static_cast<unsigned long long>(x) * y) % p);
  };
  auto powmod = [&](unsigned long b, unsigned long e) {
    unsigned long r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  if (powmod(a, (p - 1) / 2) != 1) {
    throw std::domain_error(std::to_string(a) +
                            " is not a quadratic residue mod " +
                            std::to_string(p));
  }
  if (p % 4 == 3) return powmod(a, (p + 1) / 4);
  // Tonelli-Shanks
  unsigned long q = p - 1;
  unsigned long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  unsigned long z = 2;
  while (powmod(z, (p - 1) / 2) == 1) ++z;
  unsigned long m = s;
  unsigned long c = powmod(z, q);
  unsigned long t = powmod(a, q);
  unsigned long r = powmod(a, (q + 1) / 2);
  while (t != 1) {
    unsigned long i = 0;
    unsigned long t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2);
      ++i;
    }
    unsigned long b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mulmod(b, b);
    m = i;
    c = mulmod(b, b);
    t = mulmod(t, c);
    r = mulmod(r, b);
  }
  return r;
}

PAdicInt PAdicInt::sqrt(std::optional<unsigned long> branch_hint) const {
  if (p_ == 2) {
    throw std::domain_error("2-adic square roots are not supported");
  }
  Valuation v = valuation();
  if (!v.is_finite()) {
    throw std::domain_error("sqrt of a residue with no finite valuation");
  }
  if (v.value() % 2 != 0) {
    throw std::domain_error("sqrt requires even valuation, got " + v.str());
  }
  int half = v.value() / 2;
  int unit_prec = precision_ - v.value();
  if (unit_prec < 1) {
    throw std::domain_error("insufficient precision for sqrt of " + str());
  }
  mpz_class u = residue_ / pow_p(p_, v.value());
  unsigned long u0 = mpz_class(u % p_).get_ui();

  unsigned long s0 = sqrt_mod_p(u0, p_);  // throws on non-residues
  if (branch_hint) {
    unsigned long h = *branch_hint % p_;
    if (h != s0 && h != p_ - s0) {
      throw std::domain_error("branch hint matches neither square root mod p");
    }
    s0 = h;
  }

  // Newton lift of s^2 = u; derivative 2s is a unit since p is odd.
  mpz_class s(s0);
  int prec = 1;
  while (prec < unit_prec) {
    prec = std::min(2 * prec, unit_prec);
    mpz_class m = pow_p(p_, prec);
    mpz_class deriv = 2 * s % m;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), m.get_mpz_t());
    mpz_class f = (s * s - u) % m;
    s = (s - f * inv) % m;
    if (s < 0) s += m;
  }

  int out_prec = precision_ - half;
  mpz_class out_mod = pow_p(p_, out_prec);
  mpz_class root = s * pow_p(p_, half) % out_mod;
  if (!branch_hint) {
    mpz_class other = (out_mod - root) % out_mod;
    if (other < root) root = other;
  }
  return PAdicInt(p_, out_prec, root);
}

PAdicInt PAdicInt::truncate(int k) const {
  if (k < 1 || k > precision_) {
    throw std::invalid_argument("bad truncation level " + std::to_string(k));
  }
  return PAdicInt(p_, k, residue_);
}

std::string PAdicInt::str() const {
  std::ostringstream os;
  os << residue_.get_str() << " mod " << p_ << "^" << precision_;
  return os.str();
}

}  // namespace padic_orbits

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace padic_orbits {

/// Valuation of a residue known modulo p^K.  A vanishing residue carries no
/// finite valuation; all we know is that it is at least K.
class Valuation {
 public:
  static Valuation exact(int v) { return Valuation(v, false); }
  static Valuation at_least(int bound) { return Valuation(bound, true); }

  bool is_finite() const { return !at_least_; }

  /// The exact valuation.  Only meaningful when is_finite().
  int value() const;

  /// Lower bound; equals value() when finite.
  int bound() const { return v_; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.at_least_ != b.at_least_) return false;
    return a.at_least_ ? true : a.v_ == b.v_;
  }

  std::string str() const;

 private:
  Valuation(int v, bool al) : v_(v), at_least_(al) {}
  int v_;
  bool at_least_;
};

/// A radius (or absolute value) of the form p^{-a/b}, stored as the exact
/// rational exponent a/b.  Comparisons happen on exponents only; the value
/// p^{-a/b} itself is never approximated.
class RadiusExp {
 public:
  explicit RadiusExp(mpq_class exponent);
  RadiusExp(long num, long den);

  const mpq_class& exponent() const { return exp_; }

  /// Smaller radius means larger exponent.
  friend bool operator==(const RadiusExp& a, const RadiusExp& b) {
    return a.exp_ == b.exp_;
  }
  friend bool operator<(const RadiusExp& a, const RadiusExp& b) {
    return a.exp_ > b.exp_;  // radius order, not exponent order
  }

  std::string str() const;  // "p^(-a/b)" without the p

 private:
  mpq_class exp_;
};

/// An element of Z_p held exactly modulo p^K: a canonical residue in
/// [0, p^K) together with the prime and the absolute precision K.  All
/// arithmetic is exact at the stated precision; mixed-precision operands
/// truncate to the smaller K.  Values are immutable.
class PAdicInt {
 public:
  /// residue is canonicalized into [0, p^K).  Throws if p is not prime or
  /// precision < 1.
  PAdicInt(unsigned long p, int precision, const mpz_class& residue);

  static PAdicInt from_integer(const mpz_class& n, unsigned long p,
                               int precision);

  /// Parses "d0.d1.d2..." (base-p digits, least significant first).  The
  /// digit count fixes the precision.
  static PAdicInt from_digits(const std::string& digits, unsigned long p);

  unsigned long prime() const { return p_; }
  int precision() const { return precision_; }
  const mpz_class& residue() const { return residue_; }
  mpz_class modulus() const;  // p^K

  /// Little-endian base-p digit string with '.' separators; exact
  /// round-trip through from_digits.
  std::string digits() const;

  bool is_zero() const { return residue_ == 0; }
  bool is_unit() const;

  Valuation valuation() const;

  PAdicInt operator-() const;
  friend PAdicInt operator+(const PAdicInt& a, const PAdicInt& b);
  friend PAdicInt operator-(const PAdicInt& a, const PAdicInt& b);
  friend PAdicInt operator*(const PAdicInt& a, const PAdicInt& b);

  /// Same prime, same precision, same residue.
  friend bool operator==(const PAdicInt& a, const PAdicInt& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_ &&
           a.residue_ == b.residue_;
  }

  /// x * invert_unit(x) == 1 mod p^K.  Throws on non-units.
  PAdicInt invert_unit() const;

  /// Square root for odd p.  Requires even finite valuation 2v and a unit
  /// part that is a quadratic residue mod p.  The result comes back at
  /// precision K - v.  branch_hint selects the root whose unit part is
  /// congruent to it mod p; without a hint the root with the smaller
  /// canonical residue wins.
  PAdicInt sqrt(std::optional<unsigned long> branch_hint = std::nullopt) const;

  /// Reduction to a coarser precision k <= K.
  PAdicInt truncate(int k) const;

  std::string str() const;  // "residue mod p^K"

 private:
  unsigned long p_;
  int precision_;
  mpz_class residue_;
};

/// p^e for small exponents, as an mpz.
mpz_class pow_p(unsigned long p, int e);

/// Multiplicative order of a mod p in F_p^*; a must be a unit mod p.
int multiplicative_order_mod_p(const mpz_class& a, unsigned long p);

/// Square root of a quadratic residue a mod odd prime p (Tonelli-Shanks).
unsigned long sqrt_mod_p(unsigned long a, unsigned long p);

bool is_prime(unsigned long n);

}  // namespace padic_orbits

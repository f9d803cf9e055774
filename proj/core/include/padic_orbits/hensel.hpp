#pragma once

#include <functional>
#include <vector>

#include "padic_orbits/padic_int.hpp"

namespace padic_orbits {

/// Value and derivative of a Z[x] function at a point, both reduced mod the
/// supplied modulus.
struct FnValue {
  mpz_class value;
  mpz_class derivative;
};

/// A function Z -> Z (typically a polynomial, possibly defined by
/// iteration) evaluated together with its derivative mod a given modulus.
using Differentiable =
    std::function<FnValue(const mpz_class& z, const mpz_class& modulus)>;

/// Wraps dense integer coefficients c0 + c1 x + c2 x^2 + ... as a
/// Differentiable (Horner evaluation).
Differentiable int_polynomial(std::vector<mpz_class> coefficients);

/// Lifts a simple root mod p to a root mod p^K by quadratic Newton
/// iteration.  Requires f(r0) = 0 mod p and f'(r0) != 0 mod p; throws
/// domain_error when the derivative vanishes mod p.
PAdicInt hensel_lift(const Differentiable& f, const mpz_class& root_mod_p,
                     unsigned long p, int precision);

}  // namespace padic_orbits

#include "padic_orbits/hensel.hpp"

#include <algorithm>
#include <stdexcept>

namespace padic_orbits {

Differentiable int_polynomial(std::vector<mpz_class> coefficients) {
  return [coeffs = std::move(coefficients)](const mpz_class& z,
                                            const mpz_class& modulus) {
    FnValue out{0, 0};
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      out.derivative = (out.derivative * z + out.value) % modulus;
      out.value = (out.value * z + coeffs[i]) % modulus;
    }
    if (out.value < 0) out.value += modulus;
    if (out.derivative < 0) out.derivative += modulus;
    return out;
  };
}

PAdicInt hensel_lift(const Differentiable& f, const mpz_class& root_mod_p,
                     unsigned long p, int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  mpz_class pz(p);
  FnValue at_root = f(root_mod_p, pz);
  if (at_root.value % pz != 0) {
    throw std::domain_error("not a root mod p");
  }
  if (at_root.derivative % pz == 0) {
    throw std::domain_error("derivative vanishes mod p; simple-root lift "
                            "does not apply");
  }

  mpz_class cur = root_mod_p % pz;
  if (cur < 0) cur += pz;
  int prec = 1;
  while (prec < precision) {
    prec = std::min(2 * prec, precision);
    mpz_class m = pow_p(p, prec);
    FnValue fv = f(cur, m);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), fv.derivative.get_mpz_t(),
                   m.get_mpz_t()) == 0) {
      throw std::domain_error("derivative not invertible during lift");
    }
    cur = (cur - fv.value * inv) % m;
    if (cur < 0) cur += m;
  }

  mpz_class m = pow_p(p, precision);
  if (f(cur, m).value % m != 0) {
    throw std::logic_error("Newton iteration failed to converge");
  }
  return PAdicInt(p, precision, cur);
}

}  // namespace padic_orbits

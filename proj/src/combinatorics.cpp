#include "betamom/combinatorics.hpp"

#include <stdexcept>

namespace betamom {

Rational rising_factorial(const Rational& x, unsigned long n) {
  Rational out(1);
  Rational f = x;
  for (unsigned long k = 0; k < n; ++k, f += Rational(1)) out *= f;
  return out;
}

Rational falling_factorial(const Rational& x, unsigned long n) {
  Rational out(1);
  Rational f = x;
  for (unsigned long k = 0; k < n; ++k, f -= Rational(1)) out *= f;
  return out;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Int central_binomial(unsigned long n) { return binomial(2 * n, static_cast<long>(n)); }

Int catalan(unsigned long n) {
  Int r = central_binomial(n);
  Int q;
  mpz_divexact_ui(q.get_mpz_t(), r.get_mpz_t(), n + 1);
  return q;
}

Rational catalan_ext(long n) {
  if (n == -1) return Rational(-1, 2);
  if (n < -1) throw std::domain_error("catalan_ext: index below -1");
  return Rational(catalan(static_cast<unsigned long>(n)));
}

unsigned long legendre_valuation(unsigned long n, unsigned long d) {
  if (d < 2) throw std::domain_error("legendre_valuation: base must be >= 2");
  unsigned long sum = 0, q = d;
  while (q <= n) {
    sum += n / q;
    if (q > n / d) break;  // next power would exceed n (and may overflow)
    q *= d;
  }
  return sum;
}

unsigned long PrimeFactorization::reconstruct() const {
  unsigned long v = 1;
  for (const auto& [p, e] : factors)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

PrimeFactorization factorize(unsigned long n) {
  if (n < 2) throw std::domain_error("factorize: argument must be >= 2");
  PrimeFactorization out;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.emplace_back(p, e);
  }
  if (n > 1) out.factors.emplace_back(n, 1u);
  return out;
}

}  // namespace betamom

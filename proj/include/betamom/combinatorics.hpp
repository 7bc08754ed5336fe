#pragma once

#include <utility>
#include <vector>

#include "betamom/rational.hpp"

namespace betamom {

/// x(x+1)...(x+n-1), 1 for n = 0.
Rational rising_factorial(const Rational& x, unsigned long n);

/// x(x-1)...(x-n+1), 1 for n = 0.
Rational falling_factorial(const Rational& x, unsigned long n);

Int factorial(unsigned long n);

/// 0 outside 0 <= k <= n.
Int binomial(unsigned long n, long k);

Int central_binomial(unsigned long n);  // binom(2n, n)
Int catalan(unsigned long n);           // binom(2n, n)/(n+1)

/// Extended Catalan value with C_{-1} = -1/2 (used by the d-sequence).
Rational catalan_ext(long n);

/// sum_{m>=1} floor(n/d^m); for prime d this is the multiplicity of d in n!.
unsigned long legendre_valuation(unsigned long n, unsigned long d);

struct PrimeFactorization {
  std::vector<std::pair<unsigned long, unsigned>> factors;  // increasing primes
  unsigned long reconstruct() const;
};

/// Trial division; requires n >= 2.
PrimeFactorization factorize(unsigned long n);

}  // namespace betamom

#pragma once

#include <vector>

#include "betamom/rational.hpp"

namespace betamom::integrality {

/// r^n * prod_{primes d | r} d^(sum_m floor(n/d^m)); requires r >= 2.
Int multiplier(unsigned long n, unsigned long r);

struct IntegralityRow {
  unsigned long n = 0;
  Int multiplier;
  Rational raw_moment;  // m_n(p/r, 1 - p/r)
  Rational product;
  bool is_integer = false;
};

struct IntegralityReport {
  unsigned long p = 0, r = 0;
  std::vector<IntegralityRow> rows;  // n = 0..N
  bool all_integer = false;
};

/// Requires 0 < p < r and gcd(p, r) = 1.
IntegralityReport check_integrality(unsigned long p, unsigned long r,
                                    unsigned long N);

/// 6 * 3^(sum_{j>=0} floor(n/3^j)) * 2^floor(n/2) * m_n(1/3, 6 - 1/3),
/// n = 1..N; the values are not all integers.
std::vector<Rational> demo_nonintegral(unsigned long N);

}  // namespace betamom::integrality

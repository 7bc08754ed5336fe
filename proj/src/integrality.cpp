#include "betamom/integrality.hpp"

#include <numeric>
#include <stdexcept>

#include "betamom/combinatorics.hpp"
#include "betamom/moments.hpp"

namespace betamom::integrality {

Int multiplier(unsigned long n, unsigned long r) {
  if (r < 2) throw std::domain_error("multiplier: r must be >= 2");
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), r, n);
  for (const auto& [p, e] : factorize(r).factors) {
    Int f;
    mpz_ui_pow_ui(f.get_mpz_t(), p, legendre_valuation(n, p));
    out *= f;
  }
  return out;
}

IntegralityReport check_integrality(unsigned long p, unsigned long r,
                                    unsigned long N) {
  if (p == 0 || p >= r || std::gcd(p, r) != 1)
    throw std::domain_error("check_integrality: need 0 < p < r coprime");
  IntegralityReport rep;
  rep.p = p;
  rep.r = r;
  const BetaParams params(Rational(static_cast<long>(p), static_cast<long>(r)),
                          Rational(static_cast<long>(r - p), static_cast<long>(r)));
  const std::vector<Rational> raw = m_sequence(params, N + 1);
  rep.all_integer = true;
  for (unsigned long n = 0; n <= N; ++n) {
    IntegralityRow row;
    row.n = n;
    row.multiplier = multiplier(n, r);
    row.raw_moment = raw[n];
    row.product = Rational(row.multiplier) * raw[n];
    row.is_integer = row.product.is_integer();
    rep.all_integer = rep.all_integer && row.is_integer;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<Rational> demo_nonintegral(unsigned long N) {
  std::vector<Rational> out;
  const BetaParams params(Rational(1, 3), Rational(17, 3));
  for (unsigned long n = 1; n <= N; ++n) {
    Int three;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, n + legendre_valuation(n, 3));
    Int two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, n / 2);
    out.push_back(Rational(6) * Rational(three) * Rational(two) *
                  m(n, params));
  }
  return out;
}

}  // namespace betamom::integrality

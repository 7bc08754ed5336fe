#include "betamom/moments.hpp"

#include <stdexcept>

#include "betamom/combinatorics.hpp"

namespace betamom {

Rational m(unsigned long n, const BetaParams& p) {
  return rising_factorial(p.alpha, n) /
         rising_factorial(p.alpha + p.beta, n);
}

std::vector<Rational> m_sequence(const BetaParams& p, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  Rational v(1);
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(v);
    const Rational step(static_cast<long>(n));
    v *= (p.alpha + step) / (p.alpha + p.beta + step);
  }
  return out;
}

std::vector<Rational> M_sequence(const MomentSpec& spec, std::size_t count) {
  const std::vector<Rational> mm = m_sequence(spec.params, count);
  std::vector<Rational> out;
  out.reserve(count);
  if (spec.c.is_zero()) {
    Rational p4(1);
    for (std::size_t n = 0; n < count; ++n, p4 *= Rational(4))
      out.push_back(p4 * mm[n]);
    return out;
  }
  // M_j(0,..) = 4^j m_j, then the basepoint shift from 0 to c.
  std::vector<Rational> m0;
  m0.reserve(count);
  Rational p4(1);
  for (std::size_t n = 0; n < count; ++n, p4 *= Rational(4))
    m0.push_back(p4 * mm[n]);
  for (std::size_t n = 0; n < count; ++n) {
    Rational acc(0);
    Rational cpow(1);  // c^(n-j), built from j = n downward
    for (std::size_t j = n + 1; j-- > 0;) {
      acc += Rational(binomial(n, static_cast<long>(j))) * m0[j] * cpow;
      cpow *= spec.c;
    }
    out.push_back(acc);
  }
  return out;
}

Rational M(unsigned long n, const MomentSpec& spec) {
  return M_sequence(spec, n + 1).back();
}

Rational S(unsigned long n, const Rational& gamma, const Rational& delta) {
  return M(n, MomentSpec(Rational(-2), gamma, delta));
}

std::vector<Rational> S_sequence(const Rational& gamma, const Rational& delta,
                                 std::size_t count) {
  return M_sequence(MomentSpec(Rational(-2), gamma, delta), count);
}

MomentSequence make_moment_sequence(const MomentSpec& spec, std::size_t count) {
  if (count == 0) throw std::domain_error("make_moment_sequence: empty");
  return MomentSequence{spec, M_sequence(spec, count)};
}

MomentSequence shift_basepoint(const MomentSequence& seq, const Rational& b,
                               std::size_t order) {
  if (seq.terms.empty() || order > seq.terms.size() - 1)
    throw std::domain_error("shift_basepoint: requested order exceeds input order");
  const Rational d = b - seq.spec.c;
  MomentSequence out{MomentSpec(b, seq.spec.params), {}};
  out.terms.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc(0);
    Rational dpow(1);
    for (std::size_t j = n + 1; j-- > 0;) {
      acc += Rational(binomial(n, static_cast<long>(j))) * seq.terms[j] * dpow;
      dpow *= d;
    }
    out.terms.push_back(acc);
  }
  return out;
}

MomentSequence shift_basepoint(const MomentSequence& seq, const Rational& b) {
  return shift_basepoint(seq, b, seq.terms.size() - 1);
}

std::pair<Rational, Rational> raise_params(const MomentSpec& spec, unsigned long n) {
  const Rational& a = spec.params.alpha;
  const Rational& bt = spec.params.beta;
  const Rational Mn = M(n, spec);
  const Rational Mn1 = M(n + 1, spec);
  const Rational up_a = (a + bt) / (Rational(4) * a) * (Mn1 - spec.c * Mn);
  const Rational up_b =
      (a + bt) / (Rational(4) * bt) * ((Rational(4) + spec.c) * Mn - Mn1);
  return {up_a, up_b};
}

Rational recurrence_alpha_up(const BetaParams& p, unsigned long n) {
  if (n == 0)
    throw std::domain_error("recurrence_alpha_up: defined for n >= 1");
  const Rational factor = Rational(4) * p.alpha / (p.alpha + p.beta);
  return factor * M(n - 1, MomentSpec(Rational(0), p.alpha + Rational(1), p.beta));
}

Rational half_integer_closed_form(unsigned long n, HalfIntegerFamily family,
                                  unsigned long i, unsigned long j) {
  const Rational f2ni(factorial(2 * n + 2 * i));
  switch (family) {
    case HalfIntegerFamily::half_half:
      return f2ni * Rational(factorial(i)) * Rational(factorial(i + j)) /
             (Rational(factorial(i + n)) * Rational(factorial(2 * i)) *
              Rational(factorial(i + j + n)));
    case HalfIntegerFamily::half_int: {
      if (j < 1) throw std::domain_error("half_int family needs beta = j >= 1");
      const Rational num = Rational(4).pow(static_cast<long>(n)) *
                           Rational(factorial(2 * i + 2 * j)) *
                           Rational(factorial(i + j + n)) *
                           Rational(factorial(2 * i + 2 * n)) *
                           Rational(factorial(i));
      const Rational den = Rational(factorial(2 * i)) *
                           Rational(factorial(i + j)) *
                           Rational(factorial(2 * i + 2 * j + 2 * n)) *
                           Rational(factorial(i + n));
      return num / den;
    }
    case HalfIntegerFamily::int_half: {
      if (i < 1) throw std::domain_error("int_half family needs alpha = i >= 1");
      const Rational num = Rational(4).pow(2 * static_cast<long>(n)) *
                           Rational(factorial(i + n - 1)) *
                           Rational(factorial(i + j + n)) *
                           Rational(factorial(2 * i + 2 * j));
      const Rational den = Rational(factorial(2 * i + 2 * j + 2 * n)) *
                           Rational(factorial(i - 1)) *
                           Rational(factorial(i + j));
      return num / den;
    }
  }
  throw std::logic_error("half_integer_closed_form: bad family");
}

}  // namespace betamom

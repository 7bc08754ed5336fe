#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "betamom/rational.hpp"

namespace betamom {

struct BetaParams {
  Rational alpha;
  Rational beta;
  BetaParams(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
    if (!alpha.is_positive() || !beta.is_positive())
      throw std::domain_error("BetaParams: alpha and beta must be positive");
  }
};

/// Law of 4X + c for X ~ Beta(alpha, beta); support [c, c+4].
struct MomentSpec {
  Rational c;
  BetaParams params;
  MomentSpec(Rational c_, BetaParams p) : c(std::move(c_)), params(std::move(p)) {}
  MomentSpec(Rational c_, Rational a, Rational b)
      : c(std::move(c_)), params(std::move(a), std::move(b)) {}
};

/// n-th raw Beta moment rising(alpha,n)/rising(alpha+beta,n); in (0,1].
Rational m(unsigned long n, const BetaParams& p);

/// Moments of the modified law, via the c = 0 values and the binomial shift.
Rational M(unsigned long n, const MomentSpec& spec);

/// Symmetric family on [-2,2]: S_n(gamma,delta) = M_n(-2,gamma,delta).
Rational S(unsigned long n, const Rational& gamma, const Rational& delta);

std::vector<Rational> m_sequence(const BetaParams& p, std::size_t count);
std::vector<Rational> M_sequence(const MomentSpec& spec, std::size_t count);
std::vector<Rational> S_sequence(const Rational& gamma, const Rational& delta,
                                 std::size_t count);

struct MomentSequence {
  MomentSpec spec;
  std::vector<Rational> terms;  // indexed from n = 0, terms[0] = 1
};

MomentSequence make_moment_sequence(const MomentSpec& spec, std::size_t count);

/// Rebase to b: M_n(b,..) = sum_j binom(n,j) M_j(c,..) (b-c)^(n-j).
/// Throws when `order` exceeds the available input order.
MomentSequence shift_basepoint(const MomentSequence& seq, const Rational& b);
MomentSequence shift_basepoint(const MomentSequence& seq, const Rational& b,
                               std::size_t order);

/// Parameter-raising recurrences from order-(n+1) data:
/// first = M_n(c,alpha+1,beta), second = M_n(c,alpha,beta+1).
std::pair<Rational, Rational> raise_params(const MomentSpec& spec, unsigned long n);

/// c = 0 downward recurrence M_n(0,a,b) = 4a/(a+b) M_{n-1}(0,a+1,b); n >= 1.
Rational recurrence_alpha_up(const BetaParams& p, unsigned long n);

enum class HalfIntegerFamily {
  half_half,  // alpha = i + 1/2, beta = j + 1/2
  half_int,   // alpha = i + 1/2, beta = j      (j >= 1)
  int_half,   // alpha = i,       beta = j + 1/2 (i >= 1)
};

/// Closed form for M_n(0, alpha, beta) in the three half-integer families.
Rational half_integer_closed_form(unsigned long n, HalfIntegerFamily family,
                                  unsigned long i, unsigned long j);

}  // namespace betamom

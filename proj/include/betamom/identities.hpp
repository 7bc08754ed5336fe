#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "betamom/rational.hpp"

namespace betamom::identities {

/// A tail/prefactor certificate could not be established.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// c_k(a,b) = sum_j binom(k,j) (-1)^(k-j) (a)_(j) (b)_(k-j)   (falling factorials)
Rational expansion_c(unsigned long k, const Rational& a, const Rational& b);

/// d_0 = 1; d_n = n!/(2*4^(n-1)) sum_{k=0..n} (-1)^(k-1) binom(2k,k) C_{n-k-1}
/// with C_{-1} = -1/2. Equals c_n(-1/2, 1/2).
Rational d_value(unsigned long n);

/// value = r * sqrt(pi)^spi ; exact bookkeeping for Beta/Gamma prefactors.
struct PiSqrtRational {
  Rational r;
  int spi = 0;
  friend PiSqrtRational operator*(const PiSqrtRational& a,
                                  const PiSqrtRational& b) {
    return {a.r * b.r, a.spi + b.spi};
  }
  friend PiSqrtRational operator/(const PiSqrtRational& a,
                                  const PiSqrtRational& b) {
    return {a.r / b.r, a.spi - b.spi};
  }
};

/// Gamma(q) for q > 0 with 2q integer.
PiSqrtRational gamma_half(const Rational& q);
/// B(x,y) for positive half-integer or integer arguments.
PiSqrtRational beta_half(const Rational& x, const Rational& y);

enum class TailMethod {
  finite,                 // series terminates, no tail
  gauss_closed_form,      // single-ratio unit-argument hypergeometric tail
  telescoped_recurrence,  // exact tail by the integral recurrence in m
  alternating_bracket,    // bracket between consecutive partial sums
  truncation_bracket,     // positive terms, sandwiched majorant/minorant tails
};

struct TailCertificate {
  unsigned long start = 0;  // first index the certificate covers
  TailMethod method = TailMethod::finite;
  Rational lo, hi;          // enclosure of the tail sum
  bool exact = true;
  std::string note;
};

/// Exact tail sum_{j>=J} t_j when t_{j+1}/t_j = (j+A)/(j+C) with C-A > 1:
/// t_J (J+C-1)/(C-A-1), by Gauss's unit-argument summation.
Rational gauss_single_ratio_tail(const Rational& t_J, unsigned long J,
                                 const Rational& A, const Rational& C);

/// Exact T(m,J) = sum_{j>=J} binom(2j,j) 4^(-j)/(j+m) for integer m >= 1,
/// by the recurrence (2m+1) T(m+1,J) = 2m T(m,J) + 2J c_J/(J+m) with
/// base T(1,J) = 2 binom(2J,J)/4^J.
Rational central_binomial_linear_tail(unsigned long J, unsigned long m);

/// Bracket for the tail of an alternating series with decreasing magnitudes:
/// the tail lies between 0 and the first omitted term. The sign pattern and
/// monotonicity are machine-checked on the supplied window of terms
/// t_J, t_{J+1}, ...; throws CertificationError when they fail.
TailCertificate alternating_bracket_tail(const std::vector<Rational>& window,
                                         unsigned long J);

struct SeriesValue {
  Rational lo, hi;      // enclosure of the full series value (prefactor applied)
  bool exact = false;   // lo == hi
  TailCertificate tail;
};

/// Density-ratio expansion on [0,4] (requires alpha-gamma a nonnegative
/// integer): evaluates K * sum_k rising(delta-beta,k)/(4^k k!) *
/// M_{n+alpha-gamma+k}(0,gamma,delta) with K rederived from Beta ratios.
/// Certifiable when the series terminates or delta-beta = 1 with delta > 1.
SeriesValue ratio_expansion(unsigned long n, const Rational& alpha,
                            const Rational& beta, const Rational& gamma,
                            const Rational& delta, unsigned long J);

enum class SymmetricMode {
  exact_or_throw,      // rational-certifiable instances only
  gauss_closed_form,   // Gauss-summed value, pi carried as an interval
  truncation_bracket,  // rigorous sandwich bracket from partial sums
};

/// Symmetric-family expansion on [-2,2]: evaluates
/// K * sum_k c_k(alpha-gamma, beta-delta)/(2^k k!) * S_{n+k}(gamma,delta).
SeriesValue symmetric_expansion(unsigned long n, const Rational& alpha,
                                const Rational& beta, const Rational& gamma,
                                const Rational& delta, unsigned long J,
                                SymmetricMode mode = SymmetricMode::exact_or_throw);

enum class IdentityStatus { exact_match, enclosure_contains, fail };

struct IdentityResult {
  std::string id;
  unsigned long n = 0;
  Rational lhs;
  Rational rhs_lo, rhs_hi;
  bool rhs_exact = false;
  IdentityStatus status = IdentityStatus::fail;
  std::string note;
};

std::vector<std::string> finite_identity_ids();
std::vector<std::string> infinite_identity_ids();

std::vector<IdentityResult> verify_finite(const std::string& id,
                                          unsigned long n_lo,
                                          unsigned long n_hi);

std::vector<IdentityResult> verify_infinite(const std::string& id,
                                            unsigned long n_lo,
                                            unsigned long n_hi,
                                            unsigned long J);

}  // namespace betamom::identities

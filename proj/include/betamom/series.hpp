#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "betamom/moments.hpp"
#include "betamom/rational.hpp"

namespace betamom::series {

/// Raised when dividing by x^k meets a nonzero low-order coefficient, i.e.
/// a closed form was transcribed wrongly.
struct CancellationError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Truncated formal power series with exact coefficients. A series of order N
/// stores coefficients 0..N; arithmetic results carry the minimum order of
/// the operands.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Rational> coeffs);
  static PowerSeries constant(const Rational& c, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return c_.at(k); }
  const std::vector<Rational>& coefficients() const { return c_; }

  PowerSeries truncated(std::size_t order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries operator*(const Rational& s) const;
  PowerSeries operator-() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  std::vector<Rational> c_;
};

/// 1/a; requires a nonzero constant term.
PowerSeries reciprocal(const PowerSeries& a);

/// Square root by exact Newton iteration with order doubling; the constant
/// term must be exactly 1.
PowerSeries sqrt(const PowerSeries& a);

/// (1 + a x)^e for rational e, truncated at `order`.
PowerSeries linear_binomial_pow(const Rational& e, const Rational& a,
                                std::size_t order);

/// a / x^k; the low k coefficients must vanish exactly, else
/// CancellationError. The order drops by k.
PowerSeries divide_by_power(const PowerSeries& a, std::size_t k);

/// Substitution of Lemma-gen type: (1/(1-cx)) g(x/(1-cx)); coefficient n of
/// the result is sum_j binom(n,j) g_j c^(n-j).
PowerSeries substitute_shift(const PowerSeries& g, const Rational& c);

enum class ParamShift { alpha_up, beta_up };

/// From the g.f. of {m_n(alpha,beta)} to the g.f. of {m_n(alpha+1,beta)} or
/// {m_n(alpha,beta+1)}; loses one usable coefficient to the x-division.
PowerSeries gf_param_shift(const PowerSeries& g, const BetaParams& p,
                           ParamShift dir);

PowerSeries gf_of_moments(const MomentSpec& spec, std::size_t order);
PowerSeries gf_of_moments(const BetaParams& params, std::size_t order);

/// Closed-form generating functions. Fixed ids: G-a..G-j (the c = 0 moment
/// families), bc-1..bc-14, cat-1..cat-8, as-1..as-4, cent-e1, cent-g (always
/// for the scaled sequence the catalog names). Parametric id
/// "gen-i:<alpha>:<alpha+beta>" covers the integer-sum m-series forms.
PowerSeries closed_form_gf(const std::string& id, std::size_t order);

/// Fixed ids available to closed_form_gf, in deterministic order.
std::vector<std::string> closed_form_ids();

/// m-series closed form for integer alpha+beta in 1..4.
PowerSeries gen_i_gf(const Rational& alpha, long alpha_plus_beta,
                     std::size_t order);

}  // namespace betamom::series

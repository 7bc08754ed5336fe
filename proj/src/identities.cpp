#include "betamom/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "betamom/combinatorics.hpp"
#include "betamom/interval.hpp"
#include "betamom/moments.hpp"

namespace betamom::identities {

Rational expansion_c(unsigned long k, const Rational& a, const Rational& b) {
  Rational acc(0);
  for (unsigned long j = 0; j <= k; ++j) {
    Rational term = Rational(binomial(k, static_cast<long>(j))) *
                    falling_factorial(a, j) * falling_factorial(b, k - j);
    if ((k - j) % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

Rational d_value(unsigned long n) {
  Rational acc(0);
  for (unsigned long k = 0; k <= n; ++k) {
    Rational term = Rational(central_binomial(k)) *
                    catalan_ext(static_cast<long>(n) - static_cast<long>(k) - 1);
    if (k % 2 == 0) term = -term;  // (-1)^(k-1)
    acc += term;
  }
  return Rational(factorial(n)) /
         (Rational(2) * Rational(4).pow(static_cast<long>(n) - 1)) * acc;
}

PiSqrtRational gamma_half(const Rational& q) {
  if (!q.is_positive())
    throw std::domain_error("gamma_half: argument must be positive");
  if (q.is_integer())
    return {Rational(factorial(q.num().get_ui() - 1)), 0};
  if (!(q.den() == 2))
    throw std::domain_error("gamma_half: argument must be a half-integer");
  const unsigned long n = (q - Rational(1, 2)).num().get_ui();
  // Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
  return {Rational(factorial(2 * n)) /
              (Rational(4).pow(static_cast<long>(n)) * Rational(factorial(n))),
          1};
}

PiSqrtRational beta_half(const Rational& x, const Rational& y) {
  return gamma_half(x) * gamma_half(y) / gamma_half(x + y);
}

Rational gauss_single_ratio_tail(const Rational& t_J, unsigned long J,
                                 const Rational& A, const Rational& C) {
  if (!(C - A > Rational(1)))
    throw CertificationError("gauss tail: need C - A > 1");
  return t_J * (Rational(static_cast<long>(J)) + C - Rational(1)) /
         (C - A - Rational(1));
}

Rational central_binomial_linear_tail(unsigned long J, unsigned long m) {
  if (m < 1) throw std::domain_error("central_binomial_linear_tail: m >= 1");
  const Rational cJ = Rational(central_binomial(J)) /
                      Rational(4).pow(static_cast<long>(J));
  Rational T = Rational(2) * cJ;  // m = 1
  for (unsigned long mu = 1; mu < m; ++mu) {
    const Rational lm(static_cast<long>(mu));
    T = (Rational(2) * lm * T +
         Rational(2) * Rational(static_cast<long>(J)) * cJ /
             (Rational(static_cast<long>(J)) + lm)) /
        (Rational(2) * lm + Rational(1));
  }
  return T;
}

TailCertificate alternating_bracket_tail(const std::vector<Rational>& window,
                                         unsigned long J) {
  if (window.size() < 2)
    throw CertificationError("alternating bracket: window too small");
  for (std::size_t i = 0; i + 1 < window.size(); ++i) {
    if (window[i].sign() * window[i + 1].sign() >= 0)
      throw CertificationError("alternating bracket: signs do not alternate");
    if (!(window[i + 1].abs() <= window[i].abs()))
      throw CertificationError("alternating bracket: magnitudes not decreasing");
  }
  const Rational& first = window.front();
  TailCertificate cert;
  cert.start = J;
  cert.method = TailMethod::alternating_bracket;
  cert.lo = first.is_negative() ? first : Rational(0);
  cert.hi = first.is_negative() ? Rational(0) : first;
  cert.exact = false;
  cert.note = "alternating series: tail between 0 and the first omitted term";
  return cert;
}

namespace {

SeriesValue exact_value(Rational v, TailCertificate cert) {
  SeriesValue out;
  out.lo = v;
  out.hi = std::move(v);
  out.exact = true;
  out.tail = std::move(cert);
  return out;
}

}  // namespace

SeriesValue ratio_expansion(unsigned long n, const Rational& alpha,
                            const Rational& beta, const Rational& gamma,
                            const Rational& delta, unsigned long J) {
  const Rational shift_r = alpha - gamma;
  if (!shift_r.is_integer() || shift_r.is_negative())
    throw std::domain_error("ratio_expansion: alpha-gamma must be in {0,1,2,...}");
  const unsigned long shift = shift_r.num().get_ui();

  const PiSqrtRational Kp =
      beta_half(gamma, delta) /
      PiSqrtRational{Rational(4).pow(static_cast<long>(shift)), 0} /
      beta_half(alpha, beta);
  if (Kp.spi != 0)
    throw CertificationError("ratio_expansion: prefactor does not cancel pi");
  const Rational K = Kp.r;

  const Rational dm = delta - beta;  // rising(dm, k) weights
  const BetaParams gd(gamma, delta);

  if (dm.is_integer() && !dm.is_positive()) {
    // rising(dm, k) vanishes for k > -dm: finite sum.
    const unsigned long kmax = (-dm).num().get_ui();
    Rational acc(0);
    for (unsigned long k = 0; k <= kmax; ++k) {
      acc += rising_factorial(dm, k) /
             (Rational(4).pow(static_cast<long>(k)) * Rational(factorial(k))) *
             M(n + shift + k, MomentSpec(Rational(0), gd));
    }
    return exact_value(K * acc, TailCertificate{0, TailMethod::finite,
                                                Rational(0), Rational(0), true,
                                                "terminating series"});
  }

  if (dm == Rational(1)) {
    if (!(delta > Rational(1)))
      throw CertificationError("ratio_expansion: tail needs delta > 1");
    // t_k = M_{n+shift+k}(0,gamma,delta)/4^k; ratio (k+A)/(k+C) with
    // A = gamma+n+shift, C = A+delta.
    const Rational A = gamma + Rational(static_cast<long>(n + shift));
    const Rational C = A + delta;
    Rational t = M(n + shift, MomentSpec(Rational(0), gd));
    Rational partial(0);
    for (unsigned long k = 0; k < J; ++k) {
      partial += t;
      const Rational kk(static_cast<long>(k));
      t *= (kk + A) / (kk + C);
    }
    const Rational tail = gauss_single_ratio_tail(t, J, A, C);
    return exact_value(
        K * (partial + tail),
        TailCertificate{J, TailMethod::gauss_closed_form, tail, tail, true,
                        "single-ratio Gauss tail"});
  }

  throw CertificationError("ratio_expansion: no certificate for delta-beta = " +
                           dm.to_string());
}

namespace {

// A(j) = sum_{k>=0} C_{j+k} binom(2k,k) / 16^k.
// Term ratio r_k = (k+1/2)(k+j+1/2) / ((k+1)(k+j+2)); positive, decreasing.
struct ASeries {
  unsigned long j;
  Rational term0() const { return Rational(catalan(j)); }
  Rational ratio(unsigned long k) const {
    const Rational kk(static_cast<long>(k));
    const Rational jj(static_cast<long>(j));
    return (kk + Rational(1, 2)) * (kk + jj + Rational(1, 2)) /
           ((kk + Rational(1)) * (kk + jj + Rational(2)));
  }
  // Exact sandwich for the tail from K (K >= 2j+1):
  //   t_K (K+1)  <=  sum_{k>=K} t_k  <=  2 t_K (K+1)
  // via the single-ratio comparison series k/(k+2) and (k+1/2)/(k+2).
  void check_sandwich_preconditions(unsigned long K) const {
    if (K < 2 * j + 1)
      throw CertificationError("A-series sandwich needs K >= 2j+1");
    for (unsigned long k = K; k < K + 32; ++k) {
      const Rational kk(static_cast<long>(k));
      const Rational r = ratio(k);
      if (!(r <= (kk + Rational(1, 2)) / (kk + Rational(2))) ||
          !(r >= kk / (kk + Rational(2))))
        throw CertificationError("A-series sandwich violated");
    }
  }
};

// Exact rational partial sum and final term: sum_{k<K} t_k.
std::pair<Rational, Rational> a_series_partial_exact(unsigned long j,
                                                     unsigned long K) {
  const ASeries s{j};
  Rational t = s.term0(), acc(0);
  for (unsigned long k = 0; k < K; ++k) {
    acc += t;
    t *= s.ratio(k);
  }
  return {acc, t};
}

// Interval partial sum (fast for large K) plus the exact sandwich tail.
Interval a_series_bracket(unsigned long j, unsigned long K, mpfr_prec_t prec) {
  const ASeries s{j};
  s.check_sandwich_preconditions(K);
  Interval acc(prec);
  Interval t = Interval::exact(s.term0(), prec);
  for (unsigned long k = 0; k < K; ++k) {
    acc = acc + t;
    t = t * Interval::exact(s.ratio(k), prec);
  }
  const Interval factor =
      Interval::exact(Rational(static_cast<long>(K) + 1), prec);
  const Interval tail =
      t * factor * Interval::hull(Rational(1), Rational(2), prec);
  return acc + tail;
}

// Gauss evaluation: A(j) = 4^(j+1) / ((2j+1) pi), cross-checked against the
// exact sandwich at K = 512 before use.
Interval a_series_gauss(unsigned long j, mpfr_prec_t prec) {
  const Rational numer =
      Rational(4).pow(static_cast<long>(j) + 1) /
      Rational(2 * static_cast<long>(j) + 1);
  const unsigned long K = 512;
  const ASeries s{j};
  s.check_sandwich_preconditions(K);
  auto [partial, tK] = a_series_partial_exact(j, K);
  const Rational lo_bound = partial + tK * Rational(static_cast<long>(K) + 1);
  const Rational hi_bound =
      partial + Rational(2) * tK * Rational(static_cast<long>(K) + 1);
  const Interval value =
      Interval::exact(numer, prec) * Interval::pi(prec).reciprocal();
  if (!(value.lower() >= lo_bound) || !(value.upper() <= hi_bound))
    throw CertificationError(
        "Gauss value escapes the rigorous partial-sum sandwich");
  return value;
}

}  // namespace

SeriesValue symmetric_expansion(unsigned long n, const Rational& alpha,
                                const Rational& beta, const Rational& gamma,
                                const Rational& delta, unsigned long J,
                                SymmetricMode mode) {
  const Rational a = alpha - gamma;
  const Rational b = beta - delta;
  const Rational p2 = a + b;
  if (!p2.is_integer())
    throw CertificationError("symmetric_expansion: 2-power exponent not integer");
  const PiSqrtRational Kp =
      beta_half(gamma, delta) /
      PiSqrtRational{pow2(p2.num().get_si()), 0} /
      beta_half(alpha, beta);

  // (A) terminating c-sequence: a, b nonnegative integers.
  if (a.is_integer() && !a.is_negative() && b.is_integer() && !b.is_negative()) {
    if (Kp.spi != 0)
      throw CertificationError("symmetric_expansion: prefactor keeps pi");
    const unsigned long kmax = (a + b).num().get_ui();
    Rational acc(0);
    for (unsigned long k = 0; k <= kmax; ++k)
      acc += expansion_c(k, a, b) /
             (pow2(static_cast<long>(k)) * Rational(factorial(k))) *
             S(n + k, gamma, delta);
    return exact_value(Kp.r * acc,
                       TailCertificate{0, TailMethod::finite, Rational(0),
                                       Rational(0), true, "terminating series"});
  }

  // (B) a = b = -1 with gamma = delta: c_k = k! for even k, 0 for odd k.
  if (a == Rational(-1) && b == Rational(-1) && gamma == delta) {
    if (Kp.spi != 0)
      throw CertificationError("symmetric_expansion: prefactor keeps pi");
    if ((n % 2) == 1)
      return exact_value(Rational(0),
                         TailCertificate{0, TailMethod::finite, Rational(0),
                                         Rational(0), true, "odd moments vanish"});
    if (!(gamma > Rational(1)))
      throw CertificationError("symmetric_expansion: tail needs gamma > 1");
    // u_i = S_{n+2i}(g,g)/4^i; ratio (i+p+1/2)/(i+p+gamma+1/2), p = n/2.
    const Rational p(static_cast<long>(n / 2));
    const Rational A = p + Rational(1, 2);
    const Rational C = p + gamma + Rational(1, 2);
    Rational u = S(n, gamma, gamma);
    Rational partial(0);
    for (unsigned long i = 0; i < J; ++i) {
      partial += u;
      const Rational ii(static_cast<long>(i));
      u *= (ii + A) / (ii + C);
    }
    const Rational tail = gauss_single_ratio_tail(u, J, A, C);
    return exact_value(Kp.r * (partial + tail),
                       TailCertificate{J, TailMethod::gauss_closed_form, tail,
                                       tail, true, "single-ratio Gauss tail"});
  }

  // (C) a = -1/2, b = 1/2 with gamma = delta = 3/2: the d-weighted series.
  if (a == Rational(-1, 2) && b == Rational(1, 2) &&
      gamma == Rational(3, 2) && delta == Rational(3, 2)) {
    if (Kp.spi != 2)
      throw CertificationError("symmetric_expansion: expected a pi prefactor");
    if (mode == SymmetricMode::exact_or_throw)
      throw CertificationError(
          "symmetric_expansion: pi-bearing instance needs an interval mode");
    // sum_k d_k/(2^k k!) S_{n+k}(3/2,3/2) = (-1/2)^eps A(j),
    // j = ceil(n/2), eps = n mod 2. Validate the reduction termwise first.
    const unsigned long eps = n % 2;
    const unsigned long j = (n + 1) / 2;
    {
      const ASeries s{j};
      Rational t = s.term0();
      const Rational sign = eps == 1 ? Rational(-1, 2) : Rational(1);
      for (unsigned long i = 0; i < 12; ++i) {
        const unsigned long k = 2 * i + eps;
        const Rational direct = d_value(k) /
                                (pow2(static_cast<long>(k)) *
                                 Rational(factorial(k))) *
                                S(n + k, gamma, delta);
        if (!(direct == sign * t))
          throw CertificationError(
              "symmetric_expansion: d-series reduction mismatch");
        t *= s.ratio(i);
      }
    }
    const mpfr_prec_t prec = 256;
    const Interval series = mode == SymmetricMode::gauss_closed_form
                                ? a_series_gauss(j, prec)
                                : a_series_bracket(j, std::max<unsigned long>(
                                                          J, 2 * j + 1),
                                                   prec);
    Interval factor = Interval::exact(Kp.r, prec) * Interval::pi(prec);
    Interval value = factor * series;
    if (eps == 1)
      value = value * Interval::exact(Rational(-1, 2), prec);
    SeriesValue out;
    out.lo = value.lower();
    out.hi = value.upper();
    out.exact = false;
    out.tail = TailCertificate{
        J,
        mode == SymmetricMode::gauss_closed_form
            ? TailMethod::gauss_closed_form
            : TailMethod::truncation_bracket,
        out.lo, out.hi, false,
        mode == SymmetricMode::gauss_closed_form
            ? "Gauss-summed 2F1(1/2,j+1/2;j+2;1), pi as interval"
            : "partial sum with sandwiched tail bounds"};
    return out;
  }

  throw CertificationError("symmetric_expansion: no certificate for (a,b) = (" +
                           a.to_string() + "," + b.to_string() + ")");
}

// ---------------------------------------------------------------------------
// identity catalogs
// ---------------------------------------------------------------------------

namespace {

Rational R4pow(long e) { return Rational(4).pow(e); }

Rational catalan_quarter_partial(unsigned long count) {
  Rational acc(0);
  for (unsigned long j = 0; j < count; ++j)
    acc += Rational(catalan(j)) / R4pow(static_cast<long>(j));
  return acc;
}

using FinitePair = std::function<std::pair<Rational, Rational>(unsigned long)>;

struct FiniteIdentity {
  std::string description;
  unsigned long n_min = 0;
  FinitePair eval;  // returns (lhs, rhs)
};

const std::map<std::string, FiniteIdentity>& finite_registry() {
  static const std::map<std::string, FiniteIdentity> reg = [] {
    std::map<std::string, FiniteIdentity> m;
    m["c0-i"] = {"C_n = 2 binom(2n,n) - binom(2n+2,n+1)/2", 0,
                 [](unsigned long n) {
                   const Rational lhs(catalan(n));
                   const Rational rhs =
                       Rational(2) * Rational(central_binomial(n)) -
                       Rational(central_binomial(n + 1)) / Rational(2);
                   return std::pair{lhs, rhs};
                 }};
    m["c0-ii-odd"] = {"C_{2n+1} = sum binom(2n,2i) 4^(n-i) C_i", 0,
                      [](unsigned long n) {
                        const Rational lhs(catalan(2 * n + 1));
                        Rational rhs(0);
                        for (unsigned long i = 0; i <= n; ++i)
                          rhs += Rational(binomial(2 * n, 2 * i)) *
                                 R4pow(static_cast<long>(n - i)) *
                                 Rational(catalan(i));
                        return std::pair{lhs, rhs};
                      }};
    m["c0-ii-even"] = {"C_{2n+2} = 2 sum binom(2n+1,2i) 4^(n-i) C_i", 0,
                       [](unsigned long n) {
                         const Rational lhs(catalan(2 * n + 2));
                         Rational rhs(0);
                         for (unsigned long i = 0; i <= n; ++i)
                           rhs += Rational(binomial(2 * n + 1, 2 * i)) *
                                  R4pow(static_cast<long>(n - i)) *
                                  Rational(catalan(i));
                         rhs *= Rational(2);
                         return std::pair{lhs, rhs};
                       }};
    m["c0-v"] = {"binom(2n,n)/4^n = 1 - sum_{j<n} C_j/4^(j+1) * 2", 0,
                 [](unsigned long n) {
                   const Rational lhs = Rational(central_binomial(n)) /
                                        R4pow(static_cast<long>(n));
                   const Rational rhs =
                       Rational(1) -
                       catalan_quarter_partial(n) / Rational(2);
                   return std::pair{lhs, rhs};
                 }};
    m["t2-i"] = {"sum binom(n,2i) 2^(n-2i) binom(2i,i) = binom(2n,n)", 0,
                 [](unsigned long n) {
                   Rational rhs(0);
                   for (unsigned long i = 0; 2 * i <= n; ++i)
                     rhs += Rational(binomial(n, static_cast<long>(2 * i))) *
                            pow2(static_cast<long>(n - 2 * i)) *
                            Rational(central_binomial(i));
                   return std::pair{Rational(central_binomial(n)), rhs};
                 }};
    m["t2-ii"] = {"binom(2n,n) = 2*4^(n-1) - 2^(n-1) double sum", 1,
                  [](unsigned long n) {
                    Rational acc(0);
                    for (unsigned long j = 1; 2 * j <= n; ++j)
                      acc += Rational(binomial(n, static_cast<long>(2 * j))) *
                             catalan_quarter_partial(j);
                    const Rational rhs =
                        Rational(2) * R4pow(static_cast<long>(n) - 1) -
                        pow2(static_cast<long>(n) - 1) * acc;
                    return std::pair{Rational(central_binomial(n)), rhs};
                  }};
    m["t2-iii"] = {"C_{n+1} = 2 binom(2n,n) - half sum binom(n,2j) 2^(n-2j) binom(2j+2,j+1)",
                   0,
                   [](unsigned long n) {
                     Rational acc(0);
                     for (unsigned long j = 0; 2 * j <= n; ++j)
                       acc += Rational(binomial(n, static_cast<long>(2 * j))) *
                              pow2(static_cast<long>(n - 2 * j)) *
                              Rational(central_binomial(j + 1));
                     const Rational rhs =
                         Rational(2) * Rational(central_binomial(n)) -
                         acc / Rational(2);
                     return std::pair{Rational(catalan(n + 1)), rhs};
                   }};
    m["t2-iv"] = {"C_n = sum (-1)^k binom(n,k) binom(k,floor(k/2)) 2^(n-k)", 0,
                  [](unsigned long n) {
                    Rational rhs(0);
                    for (unsigned long k = 0; k <= n; ++k) {
                      Rational term =
                          Rational(binomial(n, static_cast<long>(k))) *
                          Rational(binomial(k, static_cast<long>(k / 2))) *
                          pow2(static_cast<long>(n - k));
                      if (k % 2 == 1) term = -term;
                      rhs += term;
                    }
                    return std::pair{Rational(catalan(n)), rhs};
                  }};
    m["t2-v"] = {"binom(n,floor(n/2))/2^(n-1) = 2 - sum_{j<=floor((n-1)/2)} C_j/4^j",
                 0,
                 [](unsigned long n) {
                   const Rational lhs =
                       Rational(binomial(n, static_cast<long>(n / 2))) /
                       pow2(static_cast<long>(n) - 1);
                   const unsigned long count = n == 0 ? 0 : (n - 1) / 2 + 1;
                   const Rational rhs =
                       Rational(2) - catalan_quarter_partial(count);
                   return std::pair{lhs, rhs};
                 }};
    m["t2-vi"] = {"S_n(3/2,3/2) = 2 binom(n,fl(n/2)) - binom(n+1,fl((n+1)/2))",
                  0,
                  [](unsigned long n) {
                    const Rational lhs = S(n, Rational(3, 2), Rational(3, 2));
                    const Rational rhs =
                        Rational(2) *
                            Rational(binomial(n, static_cast<long>(n / 2))) -
                        Rational(binomial(n + 1, static_cast<long>((n + 1) / 2)));
                    return std::pair{lhs, rhs};
                  }};
    m["motz"] = {"Mo_n = sum binom(n,2j) C_j (Motzkin via moments)", 0,
                 [](unsigned long n) {
                   const Rational lhs =
                       M(n, MomentSpec(Rational(-1), Rational(3, 2),
                                       Rational(3, 2)));
                   Rational rhs(0);
                   for (unsigned long j = 0; 2 * j <= n; ++j)
                     rhs += Rational(binomial(n, static_cast<long>(2 * j))) *
                            Rational(catalan(j));
                   return std::pair{lhs, rhs};
                 }};
    m["ballot"] = {"C_n = binom(2n,n) - binom(2n,n-1)", 0,
                   [](unsigned long n) {
                     const Rational rhs =
                         Rational(central_binomial(n)) -
                         Rational(binomial(2 * n, static_cast<long>(n) - 1));
                     return std::pair{Rational(catalan(n)), rhs};
                   }};
    return m;
  }();
  return reg;
}

IdentityResult make_result(std::string id, unsigned long n, Rational lhs,
                           const SeriesValue& rhs, std::string note = {}) {
  IdentityResult r;
  r.id = std::move(id);
  r.n = n;
  r.lhs = std::move(lhs);
  r.rhs_lo = rhs.lo;
  r.rhs_hi = rhs.hi;
  r.rhs_exact = rhs.exact;
  if (rhs.exact)
    r.status = rhs.lo == r.lhs ? IdentityStatus::exact_match
                               : IdentityStatus::fail;
  else
    r.status = (rhs.lo <= r.lhs && r.lhs <= rhs.hi)
                   ? IdentityStatus::enclosure_contains
                   : IdentityStatus::fail;
  r.note = note.empty() ? rhs.tail.note : std::move(note);
  return r;
}

}  // namespace

std::vector<std::string> finite_identity_ids() {
  std::vector<std::string> out;
  for (const auto& [k, v] : finite_registry()) out.push_back(k);
  return out;
}

std::vector<std::string> infinite_identity_ids() {
  return {"c0-iii", "c0-iv", "c0-vi", "eq2", "lemma-iiib", "t2-vii",
          "t2-vii-bracket"};
}

std::vector<IdentityResult> verify_finite(const std::string& id,
                                          unsigned long n_lo,
                                          unsigned long n_hi) {
  const auto it = finite_registry().find(id);
  if (it == finite_registry().end())
    throw std::domain_error("verify_finite: unknown id " + id);
  std::vector<IdentityResult> out;
  for (unsigned long n = std::max(n_lo, it->second.n_min); n <= n_hi; ++n) {
    auto [lhs, rhs] = it->second.eval(n);
    IdentityResult r;
    r.id = id;
    r.n = n;
    r.lhs = lhs;
    r.rhs_lo = r.rhs_hi = rhs;
    r.rhs_exact = true;
    r.status = lhs == rhs ? IdentityStatus::exact_match : IdentityStatus::fail;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<IdentityResult> verify_infinite(const std::string& id,
                                            unsigned long n_lo,
                                            unsigned long n_hi,
                                            unsigned long J) {
  std::vector<IdentityResult> out;
  const Rational h(1, 2);
  for (unsigned long n = n_lo; n <= n_hi; ++n) {
    if (id == "c0-iii") {
      const SeriesValue rhs = ratio_expansion(n, h, Rational(3, 2), h,
                                              Rational(5, 2), J);
      out.push_back(make_result(id, n, Rational(catalan(n)), rhs));
    } else if (id == "c0-iv") {
      const Rational lhs = Rational(factorial(n + 1)) *
                           Rational(factorial(n + 2)) /
                           Rational(factorial(2 * n + 4));
      Rational partial(0);
      for (unsigned long j = 0; j < J; ++j)
        partial += Rational(central_binomial(j)) /
                   (R4pow(static_cast<long>(j)) *
                    Rational(static_cast<long>(n + j + 2)));
      const Rational tail = central_binomial_linear_tail(J, n + 2);
      const Rational rhs =
          (partial + tail) / R4pow(static_cast<long>(n) + 2);
      SeriesValue sv = exact_value(
          rhs, TailCertificate{J, TailMethod::telescoped_recurrence, tail,
                               tail, true, "integral-recurrence tail"});
      out.push_back(make_result(id, n, lhs, sv));
    } else if (id == "c0-vi") {
      const Rational lhs = Rational(factorial(n)) * Rational(factorial(n)) /
                           Rational(factorial(2 * n + 1));
      SeriesValue rhs =
          ratio_expansion(n, Rational(1), h, Rational(1), Rational(3, 2), J);
      // ratio_expansion evaluates M_n(0,1,1/2) = 4^{2n} lhs
      rhs.lo /= R4pow(2 * static_cast<long>(n));
      rhs.hi = rhs.lo;
      out.push_back(make_result(id, n, lhs, rhs));
    } else if (id == "eq2") {
      // partial sums of sum C_j/4^j against the exact closed form
      const unsigned long N = n;
      const Rational lhs = catalan_quarter_partial(N);
      const Rational rhs =
          Rational(2) - Rational(2) * Rational(central_binomial(N)) /
                            R4pow(static_cast<long>(N));
      SeriesValue sv = exact_value(
          rhs, TailCertificate{N, TailMethod::gauss_closed_form,
                               Rational(2) - rhs, Rational(2) - rhs, true,
                               "gap to the limit 2"});
      out.push_back(make_result(id, N, lhs, sv));
    } else if (id == "lemma-iiib") {
      // M_n(0,a,b) = b/(a+b) sum_j M_{n+j}(0,a,b+1)/4^j for (a,b) = (1/2,1/2)
      const BetaParams ab(h, h);
      const Rational lhs = M(n, MomentSpec(Rational(0), ab));
      const BetaParams up(h, Rational(3, 2));
      const Rational A = h + Rational(static_cast<long>(n));
      const Rational C = A + Rational(3, 2);  // C - A = beta + 1
      Rational t = M(n, MomentSpec(Rational(0), up));
      Rational partial(0);
      for (unsigned long j = 0; j < J; ++j) {
        partial += t;
        const Rational jj(static_cast<long>(j));
        t *= (jj + A) / (jj + C);
      }
      const Rational tail = gauss_single_ratio_tail(t, J, A, C);
      SeriesValue sv = exact_value(
          h / (h + h) * (partial + tail),
          TailCertificate{J, TailMethod::gauss_closed_form, tail, tail, true,
                          "single-ratio Gauss tail"});
      out.push_back(make_result(id, n, lhs, sv));
    } else if (id == "t2-vii" || id == "t2-vii-bracket") {
      const Rational lhs = S(n, Rational(1), Rational(2));
      const SeriesValue rhs = symmetric_expansion(
          n, Rational(1), Rational(2), Rational(3, 2), Rational(3, 2), J,
          id == "t2-vii" ? SymmetricMode::gauss_closed_form
                         : SymmetricMode::truncation_bracket);
      out.push_back(make_result(id, n, lhs, rhs));
    } else {
      throw std::domain_error("verify_infinite: unknown id " + id);
    }
  }
  return out;
}

}  // namespace betamom::identities

#include "betamom/transforms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "betamom/combinatorics.hpp"

namespace betamom::transforms {

namespace {

std::vector<Rational> binomial_sum(const std::vector<Rational>& a, bool inverse) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rational acc(0);
    for (std::size_t j = 0; j <= n; ++j) {
      Rational term = Rational(binomial(n, static_cast<long>(j))) * a[j];
      if (inverse && (n - j) % 2 == 1) term = -term;
      acc += term;
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<Rational> apply_atom(const TransformAtom& atom,
                                 std::vector<Rational> seq) {
  return std::visit(
      [&](const auto& t) -> std::vector<Rational> {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, BinomialTransform>) {
          return binomial_sum(seq, false);
        } else if constexpr (std::is_same_v<T, InverseBinomialTransform>) {
          return binomial_sum(seq, true);
        } else if constexpr (std::is_same_v<T, GeometricScale>) {
          Rational p(1);
          for (auto& v : seq) {
            v *= p;
            p *= t.q;
          }
          return seq;
        } else if constexpr (std::is_same_v<T, ConstantScale>) {
          for (auto& v : seq) v *= t.s;
          return seq;
        } else if constexpr (std::is_same_v<T, SignChange>) {
          for (std::size_t n = 1; n < seq.size(); n += 2) seq[n] = -seq[n];
          return seq;
        } else if constexpr (std::is_same_v<T, ShiftLeft>) {
          if (seq.size() < t.prefix.size())
            throw std::domain_error("ShiftLeft: sequence shorter than prefix");
          for (std::size_t i = 0; i < t.prefix.size(); ++i)
            if (seq[i] != t.prefix[i])
              throw std::domain_error("ShiftLeft: prefix mismatch at index " +
                                      std::to_string(i));
          seq.erase(seq.begin(),
                    seq.begin() + static_cast<std::ptrdiff_t>(t.prefix.size()));
          return seq;
        } else {
          static_assert(std::is_same_v<T, ShiftRight>);
          std::vector<Rational> out(t.prefix);
          out.insert(out.end(), seq.begin(), seq.end());
          return out;
        }
      },
      atom);
}

}  // namespace

std::vector<Rational> apply(const TransformSpec& t, std::vector<Rational> seq) {
  for (const auto& atom : t.atoms) seq = apply_atom(atom, std::move(seq));
  return seq;
}

TransformSpec inverse(const TransformSpec& t) {
  TransformSpec out;
  out.atoms.reserve(t.atoms.size());
  for (auto it = t.atoms.rbegin(); it != t.atoms.rend(); ++it) {
    out.atoms.push_back(std::visit(
        [](const auto& a) -> TransformAtom {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, BinomialTransform>)
            return InverseBinomialTransform{};
          else if constexpr (std::is_same_v<T, InverseBinomialTransform>)
            return BinomialTransform{};
          else if constexpr (std::is_same_v<T, GeometricScale>)
            return GeometricScale{a.q.reciprocal()};
          else if constexpr (std::is_same_v<T, ConstantScale>)
            return ConstantScale{a.s.reciprocal()};
          else if constexpr (std::is_same_v<T, SignChange>)
            return SignChange{};
          else if constexpr (std::is_same_v<T, ShiftLeft>)
            return ShiftRight{a.prefix};
          else
            return ShiftLeft{a.prefix};
        },
        *it));
  }
  return out;
}

namespace {

// Attempts a = CS(K) . GS(q) . SC^s applied to base, with q restricted to the
// search alphabet. Emits atoms in application order.
std::optional<TransformSpec> solve_scales(const std::vector<Rational>& a,
                                          const std::vector<Rational>& base,
                                          std::vector<TransformAtom> pre) {
  static const Rational kScales[] = {
      Rational(1),  Rational(-1), Rational(2),    Rational(-2), Rational(4),
      Rational(-4), Rational(1, 2), Rational(1, 4)};
  const std::size_t len = std::min(a.size(), base.size());
  if (len < 8) return std::nullopt;
  for (int sc = 0; sc < 2; ++sc) {
    for (const Rational& q : kScales) {
      // With sign change and q fixed, K is forced by the first index with
      // base != 0; all remaining terms must then agree.
      std::optional<Rational> K;
      bool ok = true;
      Rational qpow(1);
      for (std::size_t n = 0; n < len; ++n) {
        Rational rhs = base[n] * qpow;
        if (sc && n % 2 == 1) rhs = -rhs;
        if (rhs.is_zero()) {
          if (!a[n].is_zero()) { ok = false; break; }
        } else if (!K) {
          K = a[n] / rhs;
        } else if (a[n] != *K * rhs) {
          ok = false;
          break;
        }
        qpow *= q;
      }
      if (!ok || !K) continue;
      // keep the spec small: reject wild constants
      if ((*K).num().get_str().size() > 4 || (*K).den().get_str().size() > 4)
        continue;
      TransformSpec spec;
      spec.atoms = pre;
      if (sc) spec.atoms.push_back(SignChange{});
      if (!(q == Rational(1))) spec.atoms.push_back(GeometricScale{q});
      if (!(*K == Rational(1))) spec.atoms.push_back(ConstantScale{*K});
      return spec;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TransformSpec> match(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b,
                                   int depth) {
  if (a.size() < 8 || b.size() < 8) return std::nullopt;
  std::vector<std::pair<std::vector<TransformAtom>, std::vector<Rational>>> bases;
  bases.emplace_back(std::vector<TransformAtom>{}, b);
  if (depth >= 2) {
    bases.emplace_back(std::vector<TransformAtom>{BinomialTransform{}},
                       binomial_sum(b, false));
    bases.emplace_back(std::vector<TransformAtom>{InverseBinomialTransform{}},
                       binomial_sum(b, true));
  }
  for (const auto& [pre, base] : bases) {
    for (int shift = -3; shift <= 3; ++shift) {
      std::vector<TransformAtom> atoms = pre;
      std::vector<Rational> shifted;
      if (shift >= 0) {
        if (base.size() < static_cast<std::size_t>(shift) + 8) continue;
        if (shift > 0)
          atoms.push_back(ShiftLeft{{base.begin(), base.begin() + shift}});
        shifted.assign(base.begin() + shift, base.end());
      } else {
        // prepend |shift| terms taken from the head of a
        const std::size_t k = static_cast<std::size_t>(-shift);
        if (a.size() < k + 8) continue;
        // undo the scale solve on the overlap only; prefix is copied from a
        shifted = base;
        std::vector<Rational> tail(a.begin() + static_cast<std::ptrdiff_t>(k),
                                   a.end());
        auto found = solve_scales(tail, shifted, atoms);
        if (!found) continue;
        found->atoms.push_back(
            ShiftRight{{a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k)}});
        return found;
      }
      if (auto found = solve_scales(a, shifted, atoms)) return found;
    }
  }
  return std::nullopt;
}

std::string to_string(const TransformSpec& t) {
  if (t.atoms.empty()) return "identity";
  std::ostringstream os;
  bool first = true;
  for (const auto& atom : t.atoms) {
    if (!first) os << " . ";
    first = false;
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, BinomialTransform>)
            os << "binomial";
          else if constexpr (std::is_same_v<T, InverseBinomialTransform>)
            os << "inverse-binomial";
          else if constexpr (std::is_same_v<T, GeometricScale>)
            os << "scale(" << x.q << "^n)";
          else if constexpr (std::is_same_v<T, ConstantScale>)
            os << "times(" << x.s << ")";
          else if constexpr (std::is_same_v<T, SignChange>)
            os << "sc";
          else if constexpr (std::is_same_v<T, ShiftLeft>) {
            os << "l-s(";
            for (std::size_t i = 0; i < x.prefix.size(); ++i)
              os << (i ? "," : "") << x.prefix[i];
            os << ")";
          } else {
            os << "r-s(";
            for (std::size_t i = 0; i < x.prefix.size(); ++i)
              os << (i ? "," : "") << x.prefix[i];
            os << ")";
          }
        },
        atom);
  }
  return os.str();
}

}  // namespace betamom::transforms

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "betamom/rational.hpp"

namespace betamom::transforms {

struct BinomialTransform {};         // b_n = sum_j binom(n,j) a_j
struct InverseBinomialTransform {};  // a_n = sum_j (-1)^(n-j) binom(n,j) b_j
struct GeometricScale { Rational q; };   // a_n -> q^n a_n
struct ConstantScale { Rational s; };    // a_n -> s a_n
struct SignChange {};                    // a_n -> (-1)^n a_n
struct ShiftLeft { std::vector<Rational> prefix; };   // drops a checked prefix
struct ShiftRight { std::vector<Rational> prefix; };  // prepends a prefix

using TransformAtom =
    std::variant<BinomialTransform, InverseBinomialTransform, GeometricScale,
                 ConstantScale, SignChange, ShiftLeft, ShiftRight>;

struct TransformSpec {
  std::vector<TransformAtom> atoms;  // composed left to right
  bool empty() const { return atoms.empty(); }
};

/// Applies atoms left to right. ShiftLeft verifies the omitted prefix and
/// throws on mismatch or when the sequence is too short.
std::vector<Rational> apply(const TransformSpec& t, std::vector<Rational> seq);

TransformSpec inverse(const TransformSpec& t);

/// Searches compositions (scale / shifts <= 3 / sign change / binomial
/// transforms) linking b to a, i.e. apply(result, b) == a on the full
/// overlap. Both inputs need at least 8 terms.
std::optional<TransformSpec> match(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b,
                                   int depth = 3);

std::string to_string(const TransformSpec& t);

}  // namespace betamom::transforms

#pragma once

#include <string>
#include <vector>

#include "betamom/moments.hpp"
#include "betamom/transforms.hpp"

namespace betamom {

/// One identified moment family: applying scale^n and then the transform to
/// the computed M-sequence reproduces the referenced integer sequence.
/// Entries without an OEIS id carry a ten-term self-reference prefix instead.
struct NamedSequenceEntry {
  std::string label;
  std::string description;
  MomentSpec spec;
  Rational scale;                      // per-term factor scale^n
  transforms::TransformSpec transform;
  std::string oeis_id;                 // empty when absent from OEIS
  std::vector<Rational> reference_prefix;
};

const std::vector<NamedSequenceEntry>& catalog();

/// Computed sequence for a catalog row after scale and transform.
std::vector<Rational> entry_terms(const NamedSequenceEntry& e, std::size_t count);

}  // namespace betamom

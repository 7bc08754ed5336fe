#pragma once

#include <span>
#include <vector>

#include "betamom/moments.hpp"
#include "betamom/rational.hpp"

namespace betamom::hankel {

/// Exact determinants of the (n+1)x(n+1) Hankel matrices with entry
/// seq[shift+i+j], for n = 0..N. Needs seq.size() >= 2N+1+shift.
std::vector<Rational> hankel_determinants(std::span<const Rational> seq,
                                          unsigned N, int shift);

struct HankelReport {
  unsigned order = 0;
  std::vector<Rational> determinants;          // unshifted, n = 0..N
  std::vector<Rational> shifted_determinants;  // entry m_{1+i+j}
  bool pm_up_to_order = false;         // all unshifted dets >= 0
  bool stieltjes_up_to_order = false;  // all shifted dets >= 0
  bool stieltjes_meaningful = false;   // support on the nonnegative axis (c >= 0)
  bool strictly_positive = false;
  bool shifted_strictly_positive = false;
};

HankelReport check_pm(const MomentSpec& spec, unsigned N);

/// Same checks for a raw sequence (m_0 need not be 1).
HankelReport check_pm_sequence(std::span<const Rational> seq, unsigned N,
                               bool stieltjes_meaningful);

}  // namespace betamom::hankel

#pragma once

#include "wps/integer.hpp"
#include "wps/weights.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace wps {

// Divisor data of P(Q), computed on the reduced weights Q'.
struct DivisorClassInfo {
  std::vector<Integer> chow_generator;  // b with sum q'_j b_j = 1
  Integer picard_index;                 // delta'
  Rational canonical_degree;            // -|Q'| / delta'
  bool gorenstein = false;
  bool fano = false;

  // k times the Chow generator is ample.
  bool is_ample(const Integer& k) const;
};

DivisorClassInfo divisor_info(const WeightsVector& q);

// (h_0, ..., h_{2n}).
std::vector<Integer> rational_homology(const WeightsVector& q);

Integer h0_line_bundle(const WeightsVector& q, const Integer& m);

// dim H^qq(P(Q), Omega^p(m)).
Integer hodge(const WeightsVector& q, long p, long qq, const Integer& m);

struct HodgeTable {
  long n = 0;
  std::map<std::tuple<long, long, long>, Integer> entries;  // (p, q, m)

  const Integer& at(long p, long q, long m) const { return entries.at({p, q, m}); }
};

HodgeTable hodge_table(const WeightsVector& q, long m_min, long m_max);

}  // namespace wps

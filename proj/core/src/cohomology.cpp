#include "wps/cohomology.hpp"

#include "wps/errors.hpp"
#include "wps/lattice.hpp"
#include "wps/linalg.hpp"

#include <stdexcept>

namespace wps {

bool DivisorClassInfo::is_ample(const Integer& k) const { return k > 0 && divides(picard_index, k); }

DivisorClassInfo divisor_info(const WeightsVector& q) {
  if (q.size() < 2) throw DimensionError("divisor_info needs n >= 1");
  auto r = reduction_data(q);
  const auto& qr = r.reduced;
  IntMatrix col(qr.size(), 1);
  for (std::size_t j = 0; j < qr.size(); ++j) col(j, 0) = qr[j];
  auto h = hnf(col);
  DivisorClassInfo info;
  info.chow_generator = h.transform.row(0);
  info.picard_index = r.delta_reduced;
  info.canonical_degree = Rational(-qr.sum(), r.delta_reduced);
  info.canonical_degree.canonicalize();
  info.gorenstein = divides(r.delta_reduced, qr.sum());
  info.fano = info.gorenstein;
  return info;
}

std::vector<Integer> rational_homology(const WeightsVector& q) {
  if (q.size() < 2) throw DimensionError("rational_homology needs n >= 1");
  long n = static_cast<long>(q.dim());
  std::vector<Integer> h(2 * n + 1, Integer(0));
  for (long k = 0; k <= n; ++k) {
    Integer sum = 0;
    for (long i = k; i <= n; ++i) {
      Integer term = binomial(i, k) * binomial(n + 1, n - i);
      if ((i - k) % 2) sum -= term;
      else sum += term;
    }
    if (sum != 1) throw std::logic_error("even Betti number differs from 1");
    h[2 * k] = sum;
  }
  return h;
}

Integer h0_line_bundle(const WeightsVector& q, const Integer& m) {
  if (m < 0) return 0;
  return count_points(q, m);
}

namespace {

Integer face_binomial_sum(const WeightsVector& q, const Integer& m, long p) {
  Integer total = 0;
  for (const auto& [s, count] : face_histogram(q, m)) total += count * binomial(s, p);
  return total;
}

}  // namespace

Integer hodge(const WeightsVector& q, long p, long qq, const Integer& m) {
  if (q.size() < 2) throw DimensionError("hodge needs n >= 1");
  long n = static_cast<long>(q.dim());
  if (p < 0 || p > n || qq < 0 || qq > n)
    throw std::out_of_range("hodge index (p, q) out of range for n = " + std::to_string(n));
  if (qq == 0) {
    if (m < 0) return 0;
    return face_binomial_sum(q, m, p);
  }
  if (qq < n) {
    if (m != 0) return 0;
    return p == qq ? 1 : 0;
  }
  if (m > 0) return 0;
  return face_binomial_sum(q, -m, n - p);
}

HodgeTable hodge_table(const WeightsVector& q, long m_min, long m_max) {
  if (m_min > m_max) throw std::invalid_argument("empty m range");
  HodgeTable t;
  t.n = static_cast<long>(q.dim());
  for (long m = m_min; m <= m_max; ++m)
    for (long p = 0; p <= t.n; ++p)
      for (long qq = 0; qq <= t.n; ++qq) t.entries[{p, qq, m}] = hodge(q, p, qq, Integer(m));
  return t;
}

}  // namespace wps

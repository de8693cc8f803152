#include "wps/fan.hpp"

#include "wps/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace wps {

const char* reason_name(FanRejection::Reason r) {
  switch (r) {
    case FanRejection::Reason::zero_minor: return "zero_minor";
    case FanRejection::Reason::non_coprime_minors: return "non_coprime_minors";
    case FanRejection::Reason::nonzero_weighted_sum: return "nonzero_weighted_sum";
  }
  return "unknown";
}

FanRecognition recognize_fan(const IntMatrix& v) {
  if (v.rows() < 1 || v.cols() != v.rows() + 1)
    throw DimensionError("a fan matrix must have n >= 1 rows and n+1 columns");
  auto minors = max_minors(v);
  for (std::size_t j = 0; j < minors.size(); ++j)
    if (minors[j] == 0)
      return FanRejection{FanRejection::Reason::zero_minor, j, "zero maximal minor at index " + std::to_string(j)};
  std::vector<Integer> q(minors.size());
  for (std::size_t j = 0; j < q.size(); ++j) q[j] = abs(minors[j]);
  Integer g = gcd_of(q);
  if (g != 1)
    return FanRejection{FanRejection::Reason::non_coprime_minors, 0,
                        "maximal minors have common divisor " + to_string(g)};
  for (std::size_t i = 0; i < v.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < v.cols(); ++j) s += q[j] * v(i, j);
    if (s != 0)
      return FanRejection{FanRejection::Reason::nonzero_weighted_sum, i,
                          "weighted column sum is nonzero in row " + std::to_string(i)};
  }
  int eps = minors[0] < 0 ? 1 : 0;
  for (std::size_t j = 0; j < minors.size(); ++j)
    assert((minors[j] < 0) == (((eps + j) % 2) == 1));
  return FanMatrix{v, WeightsVector(std::move(q)), eps};
}

FanMatrix require_fan(const IntMatrix& v) {
  auto r = recognize_fan(v);
  if (auto* rej = std::get_if<FanRejection>(&r)) throw std::domain_error(rej->message);
  return std::get<FanMatrix>(std::move(r));
}

FanMatrix fan_from_weights(const WeightsVector& q) {
  std::size_t n = q.dim();
  if (q.size() < 2) throw DimensionError("a fan needs n >= 1");
  IntMatrix col(n + 1, 1);
  for (std::size_t j = 0; j <= n; ++j) col(j, 0) = q[j];
  auto h = hnf(col);
  auto fan = require_fan(h.transform.block(1, n + 1, 0, n + 1));
  assert(fan.weights == q);
  return fan;
}

FanMatrix canonical_fan(const WeightsVector& q) {
  auto v = fan_from_weights(q).v;
  auto h = hnf(v.without_col(0));
  auto fan = require_fan(h.transform * v);
  assert(fan.weights == q);
  return fan;
}

bool fan_isomorphic(const FanMatrix& v1, const FanMatrix& v2) { return isomorphic(v1.weights, v2.weights); }

bool is_permutation(std::span<const std::size_t> sigma, std::size_t size) {
  if (sigma.size() != size) return false;
  std::vector<bool> seen(size, false);
  for (auto s : sigma) {
    if (s >= size || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

IntMatrix permute_columns(const IntMatrix& v, std::span<const std::size_t> sigma) {
  if (!is_permutation(sigma, v.cols())) throw DimensionError("not a permutation of the column indices");
  IntMatrix out(v.rows(), v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j)
    for (std::size_t i = 0; i < v.rows(); ++i) out(i, j) = v(i, sigma[j]);
  return out;
}

}  // namespace wps

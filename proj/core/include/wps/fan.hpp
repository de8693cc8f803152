#pragma once

#include "wps/matrix.hpp"
#include "wps/weights.hpp"

#include <span>
#include <string>
#include <variant>

namespace wps {

// n x (n+1) matrix whose columns are the rays of a fan of P(weights),
// with V_j = (-1)^(epsilon + j) q_j.
struct FanMatrix {
  IntMatrix v;
  WeightsVector weights;
  int epsilon = 0;

  std::size_t dim() const { return v.rows(); }
};

struct FanRejection {
  enum class Reason { zero_minor, non_coprime_minors, nonzero_weighted_sum };
  Reason reason;
  std::size_t index = 0;
  std::string message;
};

const char* reason_name(FanRejection::Reason r);

using FanRecognition = std::variant<FanMatrix, FanRejection>;

FanRecognition recognize_fan(const IntMatrix& v);

// Like recognize_fan but throws std::domain_error on rejection.
FanMatrix require_fan(const IntMatrix& v);

FanMatrix fan_from_weights(const WeightsVector& q);
FanMatrix canonical_fan(const WeightsVector& q);

bool fan_isomorphic(const FanMatrix& v1, const FanMatrix& v2);

// (v_sigma(0), ..., v_sigma(n)); sigma must be a permutation of the column indices.
IntMatrix permute_columns(const IntMatrix& v, std::span<const std::size_t> sigma);

bool is_permutation(std::span<const std::size_t> sigma, std::size_t size);

}  // namespace wps

#pragma once

#include "wps/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace wps {

// Positive weights (q_0, ..., q_n), normalized on construction so that their gcd is 1.
class WeightsVector {
 public:
  WeightsVector() = default;
  explicit WeightsVector(std::vector<Integer> q);
  WeightsVector(std::initializer_list<long> q);

  std::size_t size() const { return q_.size(); }
  std::size_t dim() const { return q_.size() - 1; }  // n
  const Integer& operator[](std::size_t j) const { return q_[j]; }
  const std::vector<Integer>& values() const { return q_; }

  Integer sum() const;
  Integer lcm() const;
  WeightsVector sorted() const;

  friend bool operator==(const WeightsVector&, const WeightsVector&) = default;

 private:
  std::vector<Integer> q_;
};

struct ReductionData {
  std::vector<Integer> d;
  std::vector<Integer> a_coeffs;
  Integer a;
  Integer delta;
  Integer delta_reduced;
  WeightsVector reduced;
};

ReductionData reduction_data(const WeightsVector& q);
WeightsVector reduce(const WeightsVector& q);
bool is_reduced(const WeightsVector& q);

// P(q1) and P(q2) are isomorphic.
bool isomorphic(const WeightsVector& q1, const WeightsVector& q2);

}  // namespace wps

#include "wps/weights.hpp"

#include "wps/errors.hpp"

#include <algorithm>

namespace wps {

WeightsVector::WeightsVector(std::vector<Integer> q) : q_(std::move(q)) {
  if (q_.empty()) throw InvalidWeightsError("weights vector is empty");
  for (const auto& x : q_)
    if (x < 1) throw InvalidWeightsError("weights must be positive, got " + to_string(x));
  Integer g = gcd_of(q_);
  if (g != 1)
    for (auto& x : q_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

WeightsVector::WeightsVector(std::initializer_list<long> q)
    : WeightsVector([&] {
        std::vector<Integer> v;
        for (long x : q) v.emplace_back(x);
        return v;
      }()) {}

Integer WeightsVector::sum() const {
  Integer s = 0;
  for (const auto& x : q_) s += x;
  return s;
}

Integer WeightsVector::lcm() const { return lcm_of(q_); }

WeightsVector WeightsVector::sorted() const {
  WeightsVector w = *this;
  std::sort(w.q_.begin(), w.q_.end());
  return w;
}

ReductionData reduction_data(const WeightsVector& q) {
  std::size_t n1 = q.size();
  ReductionData r;
  r.d.resize(n1);
  if (n1 == 1) {
    r.d[0] = 1;
  } else {
    for (std::size_t j = 0; j < n1; ++j) {
      std::vector<Integer> others;
      for (std::size_t k = 0; k < n1; ++k)
        if (k != j) others.push_back(q[k]);
      r.d[j] = gcd_of(others);
    }
  }
  r.a_coeffs.resize(n1);
  for (std::size_t j = 0; j < n1; ++j) {
    std::vector<Integer> others;
    for (std::size_t k = 0; k < n1; ++k)
      if (k != j) others.push_back(r.d[k]);
    r.a_coeffs[j] = lcm_of(others);
  }
  r.a = lcm_of(r.a_coeffs);
  std::vector<Integer> red(n1);
  for (std::size_t j = 0; j < n1; ++j) red[j] = q[j] / r.a_coeffs[j];
  r.reduced = WeightsVector(std::move(red));
  r.delta = q.lcm();
  r.delta_reduced = r.reduced.lcm();
  return r;
}

WeightsVector reduce(const WeightsVector& q) { return reduction_data(q).reduced; }

bool is_reduced(const WeightsVector& q) {
  auto r = reduction_data(q);
  return std::all_of(r.d.begin(), r.d.end(), [](const Integer& x) { return x == 1; });
}

bool isomorphic(const WeightsVector& q1, const WeightsVector& q2) {
  if (q1.size() != q2.size()) throw DimensionError("weights vectors have different dimensions");
  return reduce(q1).sorted() == reduce(q2).sorted();
}

}  // namespace wps

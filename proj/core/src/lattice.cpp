#include "wps/lattice.hpp"

#include <stdexcept>

namespace wps {

namespace {

struct Target {
  std::vector<unsigned long> q;
  unsigned long total;
};

Target target_of(const WeightsVector& q, const Integer& m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  auto r = reduction_data(q);
  Integer t = m * r.delta_reduced;
  if (!t.fits_ulong_p()) throw std::overflow_error("m * delta' is too large to tabulate");
  Target out{{}, t.get_ui()};
  for (const auto& x : r.reduced.values()) {
    if (!x.fits_ulong_p()) throw std::overflow_error("weight too large");
    out.q.push_back(x.get_ui());
  }
  return out;
}

Integer count_solutions(const std::vector<unsigned long>& q, unsigned long total) {
  std::vector<Integer> ways(total + 1, Integer(0));
  ways[0] = 1;
  for (auto w : q)
    for (unsigned long t = w; t <= total; ++t) ways[t] += ways[t - w];
  return ways[total];
}

}  // namespace

Integer count_points(const WeightsVector& q, const Integer& m) {
  auto t = target_of(q, m);
  return count_solutions(t.q, t.total);
}

Integer count_interior(const WeightsVector& q, const Integer& m) {
  auto t = target_of(q, m);
  unsigned long shift = 0;
  for (auto w : t.q) shift += w;
  if (t.total < shift) return 0;
  return count_solutions(t.q, t.total - shift);
}

std::map<long, Integer> face_histogram(const WeightsVector& q, const Integer& m) {
  auto t = target_of(q, m);
  if (t.total == 0) return {{0, Integer(1)}};
  std::size_t n1 = t.q.size();
  // ways[s][k]: compositions of s using the weights seen so far with k nonzero parts.
  std::vector<std::vector<Integer>> ways(t.total + 1, std::vector<Integer>(n1 + 1, Integer(0)));
  ways[0][0] = 1;
  for (auto w : t.q) {
    // pos[s][k]: as above but with the current part >= 1.
    std::vector<std::vector<Integer>> pos(t.total + 1, std::vector<Integer>(n1 + 1, Integer(0)));
    for (unsigned long s = w; s <= t.total; ++s)
      for (std::size_t k = 1; k <= n1; ++k) pos[s][k] = ways[s - w][k - 1] + pos[s - w][k];
    for (unsigned long s = 0; s <= t.total; ++s)
      for (std::size_t k = 0; k <= n1; ++k) ways[s][k] += pos[s][k];
  }
  std::map<long, Integer> hist;
  for (std::size_t k = 1; k <= n1; ++k)
    if (ways[t.total][k] != 0) hist[static_cast<long>(k) - 1] = ways[t.total][k];
  return hist;
}

std::vector<std::vector<Integer>> enumerate_compositions(const WeightsVector& q, const Integer& m) {
  auto t = target_of(q, m);
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> x(t.q.size());
  auto rec = [&](auto&& self, std::size_t j, unsigned long left) -> void {
    if (j + 1 == t.q.size()) {
      if (left % t.q[j] == 0) {
        x[j] = left / t.q[j];
        out.push_back(x);
      }
      return;
    }
    for (unsigned long c = 0; c * t.q[j] <= left; ++c) {
      x[j] = c;
      self(self, j + 1, left - c * t.q[j]);
    }
  };
  rec(rec, 0, t.total);
  return out;
}

}  // namespace wps

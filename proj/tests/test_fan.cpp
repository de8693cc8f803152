#include <doctest.h>

#include "oracles.hpp"
#include "random.hpp"

#include <wps/fan.hpp>
#include <wps/linalg.hpp>

using namespace wps;
using wps::testing::Rng;

namespace {

const IntMatrix kCanonical2_3_4_15_25{
    {-14, 1, 0, 0, 1}, {-2, 0, 1, 0, 0}, {-20, 0, 0, 1, 1}, {-25, 0, 0, 0, 2}};

FanRejection rejection(const IntMatrix& v) {
  auto r = recognize_fan(v);
  REQUIRE(std::holds_alternative<FanRejection>(r));
  return std::get<FanRejection>(r);
}

}  // namespace

TEST_SUITE("fan") {

TEST_CASE("recognize fan examples") {
  auto p1 = require_fan(IntMatrix{{1, -1}});
  CHECK(p1.weights == WeightsVector{1, 1});

  auto f = require_fan(kCanonical2_3_4_15_25);
  CHECK(f.weights == WeightsVector{2, 3, 4, 15, 25});

  auto rej = rejection(IntMatrix{{1, 0, 1}, {0, 1, 1}});
  CHECK(rej.reason == FanRejection::Reason::nonzero_weighted_sum);
  CHECK(rej.index == 0);

  auto zero = rejection(IntMatrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(zero.reason == FanRejection::Reason::zero_minor);
  CHECK(zero.index == 0);

  auto coprime = rejection(IntMatrix{{2, -2}});
  CHECK(coprime.reason == FanRejection::Reason::non_coprime_minors);

  CHECK_THROWS_AS(recognize_fan(IntMatrix{{1, 2}, {3, 4}}), DimensionError);
}

TEST_CASE("epsilon records the orientation") {
  auto a = require_fan(IntMatrix{{1, -1}});
  auto b = require_fan(IntMatrix{{-1, 1}});
  CHECK(a.epsilon != b.epsilon);
  for (const auto& f : {a, b}) {
    auto mm = max_minors(f.v);
    for (std::size_t j = 0; j < mm.size(); ++j) {
      int sign = ((f.epsilon + j) % 2) ? -1 : 1;
      CHECK(mm[j] == sign * f.weights[j]);
    }
  }
}

TEST_CASE("fan from weights examples") {
  CHECK(fan_from_weights({1, 1}).weights == WeightsVector{1, 1});
  auto f23 = fan_from_weights({2, 3});
  CHECK(2 * f23.v(0, 0) + 3 * f23.v(0, 1) == 0);
  CHECK(f23.weights == WeightsVector{2, 3});
  CHECK(fan_from_weights({2, 3, 4, 15, 25}).weights == WeightsVector{2, 3, 4, 15, 25});
  CHECK_THROWS_AS(fan_from_weights({5}), DimensionError);
}

TEST_CASE("canonical fan examples") {
  CHECK(canonical_fan({2, 3, 4, 15, 25}).v == kCanonical2_3_4_15_25);
  CHECK(canonical_fan({1, 1}).v == IntMatrix{{-1, 1}});
  CHECK(canonical_fan({1, 1, 1}).v == IntMatrix{{-1, 1, 0}, {-1, 0, 1}});
}

TEST_CASE("fan isomorphism") {
  CHECK(fan_isomorphic(canonical_fan({2, 3}), fan_from_weights({3, 2})));
  CHECK(fan_isomorphic(fan_from_weights({1, 2, 2}), canonical_fan({1, 1, 1})));
  CHECK_FALSE(fan_isomorphic(fan_from_weights({1, 1, 2}), fan_from_weights({1, 2, 3})));
}

TEST_CASE("round trip and invariance of recognition") {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = testing::uniform(rng, 1, 6);
    auto q = testing::random_weights(rng, n, 10000);
    auto f = fan_from_weights(q);
    REQUIRE(f.weights == q);
    auto again = require_fan(f.v);
    CHECK(again.weights == q);

    auto a = testing::random_unimodular(rng, n);
    CHECK(require_fan(a * f.v).weights == q);

    auto sigma = testing::random_permutation(rng, n + 1);
    std::vector<Integer> permuted;
    for (auto s : sigma) permuted.push_back(q[s]);
    CHECK(require_fan(permute_columns(f.v, sigma)).weights == WeightsVector(permuted));
  }
}

TEST_CASE("canonical fan shape") {
  Rng rng(32);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = testing::uniform(rng, 1, 6);
    auto q = testing::random_weights(rng, n, 200);
    auto f = canonical_fan(q);
    CHECK(f.weights == q);
    auto v0 = f.v.without_col(0);
    std::size_t rank = 0;
    CHECK(oracle::hnf_shape(v0, rank));
    CHECK(rank == n);
    for (const auto& x : v0.data()) CHECK(x >= 0);
    for (std::size_t i = 0; i < n; ++i) CHECK(f.v(i, 0) < 0);

    // Moving v_0 behind v_n gives a matrix in HNF.
    std::vector<std::size_t> cycle(n + 1);
    for (std::size_t j = 0; j < n; ++j) cycle[j] = j + 1;
    cycle[n] = 0;
    CHECK(oracle::hnf_shape(permute_columns(f.v, cycle), rank));

    // Any fan of P(Q) normalizes to the same matrix.
    auto moved = testing::random_unimodular(rng, n) * f.v;
    CHECK(IntMatrix(hnf(moved.without_col(0)).transform * moved) == f.v);
  }
}

TEST_CASE("a literal swap of v_0 and v_n is not in HNF in general") {
  std::vector<std::size_t> swap{4, 1, 2, 3, 0};
  std::size_t rank = 0;
  CHECK_FALSE(oracle::hnf_shape(permute_columns(canonical_fan({2, 3, 4, 15, 25}).v, swap), rank));
}

TEST_CASE("canonical fan agrees with the diophantine description") {
  Rng rng(33);
  for (int t = 0; t < 400; ++t) {
    std::size_t n = testing::uniform(rng, 1, 5);
    auto q = testing::random_weights(rng, n, 40);
    auto expected = oracle::diophantine_canonical_fan(q);
    REQUIRE(expected.has_value());
    CHECK(canonical_fan(q).v == *expected);
  }
  for (const auto& q : {WeightsVector{1, 1, 1}, WeightsVector{1, 2, 3}, WeightsVector{6, 1, 2, 3},
                        WeightsVector{2, 3, 4, 15, 25}, WeightsVector{12, 4, 6, 3}})
    CHECK(canonical_fan(q).v == *oracle::diophantine_canonical_fan(q));
}

TEST_CASE("deleting the first ray of a canonical fan gives the canonical fan of the quotient weights") {
  Rng rng(34);
  int tested = 0;
  for (int t = 0; t < 2000 && tested < 200; ++t) {
    std::size_t n = testing::uniform(rng, 2, 5);
    auto q = testing::random_weights(rng, n, 30);
    Integer k2 = q[0];
    for (std::size_t j = 2; j <= n; ++j) mpz_gcd(k2.get_mpz_t(), k2.get_mpz_t(), q[j].get_mpz_t());
    std::vector<Integer> hat{q[0] / k2};
    for (std::size_t j = 2; j <= n; ++j) hat.push_back(q[j]);
    if (gcd_of(hat) != 1) continue;
    ++tested;

    auto v = canonical_fan(q).v;
    IntMatrix cut(n - 1, n);
    for (std::size_t i = 1; i < n; ++i) {
      cut(i - 1, 0) = k2 * v(i, 0);
      for (std::size_t j = 2; j <= n; ++j) cut(i - 1, j - 1) = v(i, j);
    }
    CHECK(cut == canonical_fan(WeightsVector(hat)).v);
  }
  CHECK(tested >= 100);

  CHECK(canonical_fan({2, 4, 15, 25}).v == IntMatrix{{-2, 1, 0, 0}, {-20, 0, 1, 1}, {-25, 0, 0, 2}});
}

}  // TEST_SUITE

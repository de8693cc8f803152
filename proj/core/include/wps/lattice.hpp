#pragma once

#include "wps/integer.hpp"
#include "wps/weights.hpp"

#include <map>
#include <vector>

namespace wps {

// Lattice points of m times the minimal polytope of P(Q), counted as
// compositions x >= 0 of sum q'_j x_j = m delta' over the reduced weights Q'.
Integer count_points(const WeightsVector& q, const Integer& m);

// Compositions with every x_j >= 1.
Integer count_interior(const WeightsVector& q, const Integer& m);

// s -> number of points whose smallest containing face has dimension s,
// where s = (number of nonzero x_j) - 1. Only nonzero counts are stored.
std::map<long, Integer> face_histogram(const WeightsVector& q, const Integer& m);

// Explicit list of the compositions; intended for small inputs.
std::vector<std::vector<Integer>> enumerate_compositions(const WeightsVector& q, const Integer& m);

}  // namespace wps

#pragma once

#include "wps/matrix.hpp"

#include <vector>

namespace wps {

struct HnfResult {
  IntMatrix hnf;        // B
  IntMatrix transform;  // U, unimodular, U * A = B
  std::size_t rank = 0;
};

// Row-style Hermite normal form: positive pivots, zeros left of each pivot,
// entries above a pivot reduced into [0, pivot), zero rows last.
HnfResult hnf(const IntMatrix& a);

bool is_hnf(const IntMatrix& b);

// Rows x form a Z-basis of the integer solutions of a * x^T = 0.
IntMatrix kernel_basis(const IntMatrix& a);

Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);

// (V_0, ..., V_n): signed determinants of v with column j deleted.
std::vector<Integer> max_minors(const IntMatrix& v);

IntMatrix adjoint(const IntMatrix& w);
IntMatrix adjoint_cofactor(const IntMatrix& w);
IntMatrix adjoint_bareiss(const IntMatrix& w);

RatMatrix inverse(const RatMatrix& a);
RatMatrix transverse(const RatMatrix& a);

IntMatrix what_matrix(const IntMatrix& w);

Integer entry_gcd(const IntMatrix& a);

}  // namespace wps

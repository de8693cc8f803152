#pragma once

#include "wps/fan.hpp"
#include "wps/matrix.hpp"
#include "wps/weights.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace wps {

using Point = std::vector<Integer>;

// conv(P_0, ..., P_n) in Z^n. Recognition translates by the first vertex.
class LatticeSimplex {
 public:
  explicit LatticeSimplex(std::vector<Point> vertices);
  // conv(0, columns of w).
  static LatticeSimplex from_matrix(const IntMatrix& w);

  std::size_t dim() const { return vertices_.size() - 1; }
  const std::vector<Point>& vertices() const { return vertices_; }
  bool normalized() const { return normalized_; }

  // W = (P_1 - P_0, ..., P_n - P_0).
  IntMatrix matrix() const;
  LatticeSimplex normalize() const;

  friend bool operator==(const LatticeSimplex& a, const LatticeSimplex& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<Point> vertices_;
  bool normalized_ = false;
};

struct PolarizedWps {
  WeightsVector weights;
  Integer m;
};

// (V^0)^{-T} * delta * diag(1/q_1, ..., 1/q_n).
IntMatrix weighted_transverse(const FanMatrix& v);

LatticeSimplex polytope_of(const WeightsVector& q, const Integer& m = 1);

struct PAdmissibility {
  bool admissible = false;    // condition (b): row sums of Adj(W) divisible by q_0 s
  bool lattice_condition = false;  // condition (c)
  bool fan_witness = false;   // condition (a), via the reconstructed fan
  Integer q0;
  Integer s;
  Integer delta;  // |det W| / s
  std::vector<Integer> row_sums;
};

PAdmissibility is_p_admissible(const IntMatrix& w);

struct PolytopeRecognition {
  PolarizedWps wps;
  FanMatrix fan;
};

struct PolytopeRejection {
  std::string message;
  std::vector<Integer> partial_weights;  // (q_0, ..., q_n) computed before the integrality test
};

using PolytopeResult = std::variant<PolytopeRecognition, PolytopeRejection>;

PolytopeResult recognize_polytope(const LatticeSimplex& s);

// (w_sigma(1) - w_sigma(0), ..., w_sigma(n) - w_sigma(0)) with w_0 = 0.
IntMatrix permute_polytope(const IntMatrix& w, std::span<const std::size_t> sigma);

}  // namespace wps

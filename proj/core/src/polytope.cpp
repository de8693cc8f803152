#include "wps/polytope.hpp"

#include "wps/linalg.hpp"

#include <optional>
#include <stdexcept>

namespace wps {

LatticeSimplex::LatticeSimplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw DimensionError("a simplex needs n+1 >= 2 vertices");
  std::size_t n = vertices_.size() - 1;
  for (const auto& p : vertices_)
    if (p.size() != n) throw DimensionError("every vertex of an n-simplex needs n coordinates");
  normalized_ = true;
  for (const auto& x : vertices_[0])
    if (x != 0) normalized_ = false;
}

LatticeSimplex LatticeSimplex::from_matrix(const IntMatrix& w) {
  if (!w.square() || w.rows() == 0) throw DimensionError("a simplex matrix must be square");
  std::vector<Point> pts;
  pts.emplace_back(w.rows(), Integer(0));
  for (std::size_t j = 0; j < w.cols(); ++j) pts.push_back(w.col(j));
  return LatticeSimplex(std::move(pts));
}

IntMatrix LatticeSimplex::matrix() const {
  std::size_t n = dim();
  IntMatrix w(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) w(i, j) = vertices_[j + 1][i] - vertices_[0][i];
  return w;
}

LatticeSimplex LatticeSimplex::normalize() const { return from_matrix(matrix()); }

IntMatrix weighted_transverse(const FanMatrix& f) {
  std::size_t n = f.dim();
  Integer delta = f.weights.lcm();
  RatMatrix t = transverse(to_rational(f.v.without_col(0)));
  for (std::size_t k = 0; k < n; ++k) {
    Rational scale(delta, f.weights[k + 1]);
    scale.canonicalize();
    for (std::size_t i = 0; i < n; ++i) t(i, k) *= scale;
  }
  return to_integer(t);
}

LatticeSimplex polytope_of(const WeightsVector& q, const Integer& m) {
  if (m < 1) throw std::invalid_argument("polarization m must be positive");
  return LatticeSimplex::from_matrix(m * weighted_transverse(fan_from_weights(q)));
}

namespace {

struct WhatData {
  IntMatrix what;
  std::vector<Integer> s_rows;
  Integer s;
  std::vector<Integer> q;  // q_0, ..., q_n
  std::vector<Integer> row_sums;
};

WhatData what_data(const IntMatrix& w) {
  std::size_t n = w.rows();
  WhatData d;
  IntMatrix adj = adjoint(w);
  d.s_rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.s_rows[i] = gcd_of(adj.row(i));
  d.s = gcd_of(d.s_rows);
  d.row_sums.assign(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.row_sums[j] += adj(i, j);
  d.what = what_matrix(w);
  d.q.resize(n + 1);
  d.q[0] = abs(determinant(d.what));
  for (std::size_t i = 0; i < n; ++i) d.q[i + 1] = d.s_rows[i] / d.s;
  return d;
}

// v_0 = -(1/q_0) sum q_i (row i of what); empty when not integral.
std::optional<IntMatrix> reconstruct_fan(const WhatData& d) {
  std::size_t n = d.what.rows();
  IntMatrix v(n, n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    Integer sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += d.q[i + 1] * d.what(i, k);
    if (!divides(d.q[0], sum)) return std::nullopt;
    v(k, 0) = -sum / d.q[0];
    for (std::size_t i = 0; i < n; ++i) v(k, i + 1) = d.what(i, k);
  }
  return v;
}

// Solves x * w = target over Z via HNF of w; empty when no integer solution.
bool in_row_lattice(const IntMatrix& w, const std::vector<Integer>& target) {
  auto h = hnf(w);
  std::vector<Integer> rest = target;
  for (std::size_t r = 0; r < h.rank; ++r) {
    std::size_t p = 0;
    while (h.hnf(r, p) == 0) ++p;
    if (!divides(h.hnf(r, p), rest[p])) return false;
    Integer c = rest[p] / h.hnf(r, p);
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c * h.hnf(r, j);
  }
  for (const auto& x : rest)
    if (x != 0) return false;
  return true;
}

}  // namespace

PAdmissibility is_p_admissible(const IntMatrix& w) {
  if (!w.square() || w.rows() == 0) throw DimensionError("is_p_admissible needs a square matrix");
  Integer det = determinant(w);
  if (det == 0) throw SingularMatrixError();
  if (entry_gcd(w) != 1)
    throw NonPrimitiveMatrixError("matrix entries have gcd " + to_string(entry_gcd(w)) +
                                  "; divide by it (the polarization m) first");
  auto d = what_data(w);
  PAdmissibility r;
  r.q0 = d.q[0];
  r.s = d.s;
  r.delta = abs(det) / d.s;
  r.row_sums = d.row_sums;
  Integer mod = d.q[0] * d.s;
  r.admissible = true;
  for (const auto& x : d.row_sums)
    if (!divides(mod, x)) r.admissible = false;

  if (divides(r.q0, r.delta)) {
    std::vector<Integer> target(w.rows(), r.delta / r.q0);
    r.lattice_condition = in_row_lattice(w, target);
  }

  if (auto v = reconstruct_fan(d)) {
    auto fan = recognize_fan(*v);
    if (auto* f = std::get_if<FanMatrix>(&fan)) r.fan_witness = weighted_transverse(*f) == w;
  }
  return r;
}

PolytopeResult recognize_polytope(const LatticeSimplex& s) {
  IntMatrix w = s.matrix();
  if (determinant(w) == 0) throw DegenerateSimplexError("simplex is not full-dimensional");
  Integer m = entry_gcd(w);
  IntMatrix wp = w;
  for (std::size_t i = 0; i < wp.rows(); ++i)
    for (std::size_t j = 0; j < wp.cols(); ++j) mpz_divexact(wp(i, j).get_mpz_t(), wp(i, j).get_mpz_t(), m.get_mpz_t());
  if (entry_gcd(wp) != 1) throw std::logic_error("primitive part of W is not primitive");

  auto d = what_data(wp);
  auto v = reconstruct_fan(d);
  if (!v) return PolytopeRejection{"not a wps polytope: v_0 is not integral", d.q};

  auto fan = recognize_fan(*v);
  if (auto* rej = std::get_if<FanRejection>(&fan))
    return PolytopeRejection{"not a wps polytope: reconstructed fan rejected (" + rej->message + ")", d.q};
  auto& f = std::get<FanMatrix>(fan);
  if (f.weights.values() != d.q || weighted_transverse(f) != wp)
    return PolytopeRejection{"not a wps polytope: reconstructed fan does not reproduce the simplex", d.q};
  return PolytopeRecognition{PolarizedWps{f.weights, m}, std::move(f)};
}

IntMatrix permute_polytope(const IntMatrix& w, std::span<const std::size_t> sigma) {
  std::size_t n = w.rows();
  if (!w.square()) throw DimensionError("permute_polytope needs a square matrix");
  if (!is_permutation(sigma, n + 1)) throw DimensionError("sigma must permute {0, ..., n}");
  auto vertex = [&](std::size_t k, std::size_t i) { return k == 0 ? Integer(0) : w(i, k - 1); };
  IntMatrix out(n, n);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 0; i < n; ++i) out(i, k - 1) = vertex(sigma[k], i) - vertex(sigma[0], i);
  return out;
}

}  // namespace wps

#include "oracles.hpp"

#include <wps/fan.hpp>
#include <wps/linalg.hpp>
#include <wps/polytope.hpp>

#include <functional>
#include <stdexcept>

namespace wps::oracle {

Integer laplace_det(const IntMatrix& a) {
  std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    Integer minor = laplace_det(a.block(1, n, 0, n).without_col(j));
    det += (j % 2 ? -1 : 1) * a(0, j) * minor;
  }
  return det;
}

IntMatrix cofactor_adjoint(const IntMatrix& a) {
  std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      IntMatrix m(n - 1, n - 1);
      for (std::size_t i = 0, ii = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, jj = 0; j < n; ++j)
          if (j != c) m(ii, jj++) = a(i, j);
        ++ii;
      }
      adj(c, r) = ((r + c) % 2 ? -1 : 1) * laplace_det(m);
    }
  return adj;
}

bool hnf_shape(const IntMatrix& b, std::size_t& rank) {
  std::vector<std::size_t> pivots;
  std::size_t i = 0;
  for (; i < b.rows(); ++i) {
    std::size_t p = 0;
    while (p < b.cols() && b(i, p) == 0) ++p;
    if (p == b.cols()) break;
    if (!pivots.empty() && p <= pivots.back()) return false;
    if (b(i, p) <= 0) return false;
    pivots.push_back(p);
  }
  rank = pivots.size();
  for (; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) != 0) return false;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t above = 0; above < r; ++above) {
      const Integer& x = b(above, pivots[r]);
      if (x < 0 || x >= b(r, pivots[r])) return false;
    }
  return true;
}

std::optional<IntMatrix> diophantine_canonical_fan(const WeightsVector& q) {
  std::size_t n = q.dim();
  std::vector<Integer> k(n + 2, Integer(0));  // k[j] for j = 1..n
  for (std::size_t j = 1; j <= n; ++j) {
    Integer g = q[0];
    for (std::size_t t = j; t <= n; ++t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q[t].get_mpz_t());
    k[j] = g;
  }
  std::vector<Integer> diag(n + 1);
  for (std::size_t j = 1; j < n; ++j) diag[j] = k[j + 1] / k[j];
  diag[n] = q[0] / k[n];

  IntMatrix v(n, n + 1);
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<Integer> x(n + 1, Integer(0));
    int solutions = 0;
    std::vector<Integer> best;
    std::function<void(std::size_t)> search = [&](std::size_t t) {
      if (t > n) {
        Integer s = q[j] * diag[j];
        for (std::size_t c = j + 1; c <= n; ++c) s += q[c] * x[c];
        if (s % q[0] == 0) {
          ++solutions;
          best = x;
          best[0] = -s / q[0];
        }
        return;
      }
      for (x[t] = 0; x[t] < diag[t]; ++x[t]) search(t + 1);
      x[t] = 0;
    };
    search(j + 1);
    if (solutions != 1) return std::nullopt;
    v(j - 1, 0) = best[0];
    v(j - 1, j) = diag[j];
    for (std::size_t c = j + 1; c <= n; ++c) v(j - 1, c) = best[c];
  }
  return v;
}

bool p_admissible_by_rays(const IntMatrix& w) {
  std::size_t n = w.rows();
  Integer det = laplace_det(w);
  IntMatrix adj = cofactor_adjoint(w);
  IntMatrix v0(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Integer g = gcd_of(adj.row(k));
    for (std::size_t i = 0; i < n; ++i) v0(i, k) = adj(k, i) * sgn(det) / g;
  }
  RatMatrix t = transverse(to_rational(v0));
  std::vector<Rational> relation(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<Rational> c;
    for (std::size_t i = 0; i < n; ++i) {
      if (t(i, k) == 0) {
        if (w(i, k) != 0) return false;
        continue;
      }
      Rational ratio = Rational(w(i, k)) / t(i, k);
      if (c && *c != ratio) return false;
      c = ratio;
    }
    if (!c || *c <= 0) return false;
    for (std::size_t i = 0; i < n; ++i) relation[i] -= Rational(v0(i, k)) / *c;
  }
  std::vector<Integer> dens;
  for (const auto& r : relation) dens.push_back(r.get_den());
  Integer l = lcm_of(dens);
  std::vector<Integer> nums;
  for (const auto& r : relation) nums.push_back(Integer(r * l));
  Integer g = gcd_of(nums);
  if (g == 0) return false;
  IntMatrix v(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    v(i, 0) = nums[i] / g;
    for (std::size_t k = 0; k < n; ++k) v(i, k + 1) = v0(i, k);
  }
  auto fan = recognize_fan(v);
  auto* f = std::get_if<FanMatrix>(&fan);
  return f && weighted_transverse(*f) == w;
}

bool p_admissible_by_lattice(const IntMatrix& w) {
  std::size_t n = w.rows();
  Integer det = laplace_det(w);
  IntMatrix adj = cofactor_adjoint(w);
  std::vector<Integer> s_rows;
  Integer prod = 1;
  for (std::size_t i = 0; i < n; ++i) {
    s_rows.push_back(gcd_of(adj.row(i)));
    prod *= s_rows.back();
  }
  Integer s = gcd_of(s_rows);
  Integer power = 1;
  for (std::size_t i = 1; i < n; ++i) power *= abs(det);
  if (power % prod != 0) throw std::logic_error("|det W|^(n-1) not divisible by the row gcds");
  Integer q0 = power / prod;
  Integer delta = abs(det) / s;
  if (delta % q0 != 0) return false;
  Integer c = delta / q0;
  for (std::size_t j = 0; j < n; ++j) {
    Integer x = 0;
    for (std::size_t i = 0; i < n; ++i) x += c * adj(i, j);
    if (x % det != 0) return false;
  }
  return true;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t to_i64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("oracle value exceeds 64 bits");
  return x.get_si();
}

}  // namespace

GeometricCount geometric_points(const WeightsVector& q, long m) {
  auto red = reduction_data(q);
  const auto& qr = red.reduced;
  std::size_t n = qr.dim();
  GeometricCount out;
  if (m == 0) {
    out.total = 1;
    out.histogram[0] = 1;
    return out;
  }
  auto fan = canonical_fan(qr);
  std::vector<std::vector<std::int64_t>> v0(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      v0[i][k] = to_i64(fan.v(i, k + 1));
      if (i > k && v0[i][k] != 0) throw std::logic_error("canonical V^0 is not upper triangular");
    }
  std::vector<std::int64_t> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = to_i64(qr[k + 1]);
  std::int64_t big_r = m * to_i64(red.delta_reduced);

  // The simplex must have the vertices 0 and m * (columns of the weighted transverse).
  IntMatrix wt = weighted_transverse(fan);
  for (std::size_t c = 0; c < n; ++c) {
    std::int64_t slack = big_r;
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t y = 0;
      for (std::size_t i = 0; i < n; ++i) y += m * to_i64(wt(i, c)) * v0[i][k];
      if ((k == c) != (y != 0) || y < 0) throw std::logic_error("vertex violates facet inequalities");
      slack -= w[k] * y;
    }
    if (slack != 0) throw std::logic_error("vertex off the opposite facet");
  }

  std::vector<std::int64_t> u(n, 0);
  auto add = [&](long tight, std::int64_t count) {
    if (count == 0) return;
    out.histogram[static_cast<long>(n) - tight] += count;
    out.total += count;
  };
  std::function<void(std::size_t, std::int64_t, long)> walk = [&](std::size_t k, std::int64_t rem, long tight) {
    std::int64_t base = 0;
    for (std::size_t i = 0; i < k; ++i) base += u[i] * v0[i][k];
    std::int64_t d = v0[k][k];
    std::int64_t lo = ceil_div(-base, d);
    std::int64_t hi = floor_div(floor_div(rem, w[k]) - base, d);
    if (lo > hi) return;
    if (k + 1 < n) {
      for (u[k] = lo; u[k] <= hi; ++u[k]) {
        std::int64_t y = base + u[k] * d;
        walk(k + 1, rem - w[k] * y, tight + (y == 0));
      }
      return;
    }
    add(tight, hi - lo + 1);
    std::vector<std::int64_t> ends = {lo};
    if (hi != lo) ends.push_back(hi);
    for (auto e : ends) {
      std::int64_t y = base + e * d;
      long t = tight + (y == 0) + (rem - w[k] * y == 0);
      if (t != tight) {
        out.histogram[static_cast<long>(n) - tight] -= 1;
        out.total -= 1;
        add(t, 1);
      }
    }
  };
  walk(0, big_r, 0);
  for (auto it = out.histogram.begin(); it != out.histogram.end();)
    it = it->second == 0 ? out.histogram.erase(it) : std::next(it);
  return out;
}

std::int64_t brute_compositions(const std::vector<long>& q, long total, bool positive) {
  std::function<std::int64_t(std::size_t, long)> rec = [&](std::size_t j, long left) -> std::int64_t {
    if (j == q.size()) return left == 0 ? 1 : 0;
    std::int64_t c = 0;
    for (long x = positive ? 1 : 0; x * q[j] <= left; ++x) c += rec(j + 1, left - x * q[j]);
    return c;
  };
  return rec(0, total);
}

}  // namespace wps::oracle

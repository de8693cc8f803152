#include "wps/linalg.hpp"

#include <utility>

namespace wps {

namespace {

// row[dst] -= f * row[src] in both matrices.
void sub_row(IntMatrix& b, IntMatrix& u, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < b.cols(); ++j) b(dst, j) -= f * b(src, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) -= f * u(src, j);
}

void negate_row(IntMatrix& b, IntMatrix& u, std::size_t r) {
  for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) = -b(r, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  IntMatrix b = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < b.cols() && r < b.rows(); ++c) {
    while (true) {
      std::size_t best = b.rows();
      for (std::size_t i = r; i < b.rows(); ++i)
        if (b(i, c) != 0 && (best == b.rows() || abs(b(i, c)) < abs(b(best, c)))) best = i;
      if (best == b.rows()) break;
      b.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < b.rows(); ++i) {
        if (b(i, c) == 0) continue;
        Integer f = b(i, c) / b(r, c);
        sub_row(b, u, i, r, f);
        if (b(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (b(r, c) == 0) continue;
    if (b(r, c) < 0) negate_row(b, u, r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer f = floor_div(b(i, c), b(r, c));
      if (f != 0) sub_row(b, u, i, r, f);
    }
    ++r;
  }
  return {std::move(b), std::move(u), r};
}

bool is_hnf(const IntMatrix& b) {
  std::size_t prev_pivot = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::size_t p = 0;
    while (p < b.cols() && b(i, p) == 0) ++p;
    if (p == b.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (i > 0 && p <= prev_pivot) return false;
    if (b(i, p) < 1) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (b(k, p) < 0 || b(k, p) >= b(i, p)) return false;
    prev_pivot = p;
  }
  return true;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  auto h = hnf(a.transpose());
  return h.transform.block(h.rank, h.transform.rows(), 0, h.transform.cols());
}

Integer determinant(const IntMatrix& a) {
  if (!a.square()) throw DimensionError("determinant needs a square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& a) {
  if (!a.square()) throw DimensionError("determinant needs a square matrix");
  std::size_t n = a.rows();
  RatMatrix m = a;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(k, p);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::vector<Integer> max_minors(const IntMatrix& v) {
  if (v.rows() == 0 || v.cols() != v.rows() + 1)
    throw DimensionError("max_minors needs an n x (n+1) matrix");
  std::vector<Integer> out;
  out.reserve(v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j) out.push_back(determinant(v.without_col(j)));
  return out;
}

IntMatrix adjoint_cofactor(const IntMatrix& w) {
  if (!w.square() || w.rows() == 0) throw DimensionError("adjoint needs a square matrix");
  std::size_t n = w.rows();
  if (determinant(w) == 0) throw SingularMatrixError();
  if (n == 1) return IntMatrix::identity(1);
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(i, j) is the (j, i) cofactor.
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = w(r, c);
        }
        ++rr;
      }
      Integer d = determinant(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? d : Integer(-d);
    }
  return adj;
}

IntMatrix adjoint_bareiss(const IntMatrix& w) {
  if (!w.square() || w.rows() == 0) throw DimensionError("adjoint needs a square matrix");
  std::size_t n = w.rows();
  IntMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = w(i, j);
    m(i, n + i) = 1;
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) throw SingularMatrixError();
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      Integer mik = m(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        m(i, j) = m(k, k) * m(i, j) - mik * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  // Rows k < n-1 carry older pivots; rescale them to the final one.
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer x = m(i, n + j) * prev;
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), m(i, i).get_mpz_t());
      adj(i, j) = sign * x;
    }
  }
  return adj;
}

IntMatrix adjoint(const IntMatrix& w) {
  if (w.square() && w.rows() <= 3) return adjoint_cofactor(w);
  return adjoint_bareiss(w);
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.square() || a.rows() == 0) throw DimensionError("inverse needs a square matrix");
  std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError();
    m.swap_rows(k, p);
    inv.swap_rows(k, p);
    Rational piv = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rational f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatMatrix transverse(const RatMatrix& a) { return inverse(a).transpose(); }

IntMatrix what_matrix(const IntMatrix& w) {
  Integer det = determinant(w);
  if (det == 0) throw SingularMatrixError();
  IntMatrix adj = adjoint(w);
  for (std::size_t i = 0; i < adj.rows(); ++i) {
    auto r = adj.row(i);
    Integer s = gcd_of(r);
    if (det < 0) s = -s;
    for (std::size_t j = 0; j < adj.cols(); ++j) mpz_divexact(adj(i, j).get_mpz_t(), adj(i, j).get_mpz_t(), s.get_mpz_t());
  }
  return adj;
}

Integer entry_gcd(const IntMatrix& a) { return gcd_of(a.data()); }

}  // namespace wps

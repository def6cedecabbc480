#include "wlift/matrix.hpp"

namespace wlift {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

namespace {

// row[target] = x*row[a] + y*row[b] style updates applied to H and U together.
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  // (row_a, row_b) <- (s*row_a + t*row_b, u*row_a + v*row_b)
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer ra = m(a, j);
    Integer rb = m(b, j);
    m(a, j) = s * ra + t * rb;
    m(b, j) = u * ra + v * rb;
  }
}

void add_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= k * m(source, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteWithTransform hermite_with_transform(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Fold every lower entry of this column into the pivot row by extended gcd.
    for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
      if (h(r, col) == 0) continue;
      Integer x = h(pivot_row, col);
      Integer y = h(r, col);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      Integer xg = x / g;
      Integer yg = y / g;
      // [s t; -y/g x/g] has determinant 1.
      combine_rows(h, pivot_row, r, s, t, -yg, xg);
      combine_rows(u, pivot_row, r, s, t, -yg, xg);
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    const Integer& p = h(pivot_row, col);
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer k;
      mpz_fdiv_q(k.get_mpz_t(), h(r, col).get_mpz_t(), p.get_mpz_t());
      add_multiple(h, r, pivot_row, k);
      add_multiple(u, r, pivot_row, k);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return {std::move(h), std::move(u), pivot_row};
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  auto res = hermite_with_transform(a);
  IntMatrix out(res.rank, a.cols());
  for (std::size_t i = 0; i < res.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = res.h(i, j);
  return out;
}

IntMatrix integer_left_kernel(const IntMatrix& a) {
  auto res = hermite_with_transform(a);
  IntMatrix ker(a.rows() - res.rank, a.rows());
  for (std::size_t i = res.rank; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) ker(i - res.rank, j) = res.u(i, j);
  return hermite_normal_form(ker);
}

std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(r, sel);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatMatrix right_kernel(const RatMatrix& m) {
  RatMatrix red = m;
  auto pivots = row_reduce(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix ker(free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    ker(k, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) ker(k, pivots[i]) = -red(i, f);
  }
  return ker;
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      m.swap_rows(sel, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw UsageError("inverse of a non-square matrix");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw UsageError("inverse of a singular matrix");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }

}  // namespace wlift

#include "wlift/enumerate.hpp"

namespace wlift {

namespace {

RatMatrix congruent(const IntMatrix& t, const RatMatrix& g) {
  RatMatrix tr = to_rational(t);
  return tr * g * tr.transpose();
}

struct GramSchmidt {
  RatMatrix mu;
  std::vector<Rational> norms;
};

GramSchmidt gram_schmidt(const RatMatrix& g) {
  const std::size_t n = g.rows();
  GramSchmidt gs{RatMatrix(n, n), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= gs.mu(j, k) * gs.mu(i, k) * gs.norms[k];
      gs.mu(i, j) = s / gs.norms[j];
    }
    Rational s = g(i, i);
    for (std::size_t k = 0; k < i; ++k) s -= gs.mu(i, k) * gs.mu(i, k) * gs.norms[k];
    gs.norms[i] = s;
  }
  return gs;
}

}  // namespace

bool is_positive_definite(const RatMatrix& gram) {
  if (gram.rows() != gram.cols()) return false;
  for (std::size_t k = 1; k <= gram.rows(); ++k) {
    RatMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram(i, j);
    if (sgn(determinant(minor)) <= 0) return false;
  }
  return true;
}

ReducedGram lll_reduce(const RatMatrix& gram) {
  const std::size_t n = gram.rows();
  IntMatrix t = IntMatrix::identity(n);
  if (n < 2) return {gram, t};
  const Rational delta(3, 4);
  std::size_t k = 1;
  RatMatrix g = gram;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      GramSchmidt gs = gram_schmidt(g);
      Integer r = round_nearest(gs.mu(k, jj));
      if (r == 0) continue;
      for (std::size_t c = 0; c < n; ++c) t(k, c) -= r * t(jj, c);
      g = congruent(t, gram);
    }
    GramSchmidt gs = gram_schmidt(g);
    const Rational& m = gs.mu(k, k - 1);
    if (gs.norms[k] >= (delta - m * m) * gs.norms[k - 1]) {
      ++k;
    } else {
      t.swap_rows(k, k - 1);
      g = congruent(t, gram);
      k = (k > 1) ? k - 1 : 1;
    }
  }
  return {g, t};
}

namespace {

class FinckePohst {
 public:
  FinckePohst(const RatMatrix& gram, const Rational& bound, const IntMatrix& transform,
              const VectorVisitor& visit)
      : n_(gram.rows()), q_(gram), bound_(bound), transform_(transform), visit_(visit),
        x_(n_), remaining_(n_), orig_(n_) {
    // Cholesky-style decomposition: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        q_(j, i) = q_(i, j);
        q_(i, j) = q_(i, j) / q_(i, i);
      }
      for (std::size_t k = i + 1; k < n_; ++k)
        for (std::size_t l = k; l < n_; ++l) q_(k, l) -= q_(k, i) * q_(i, l);
    }
  }

  void run() {
    if (n_ == 0) {
      visit_({}, Rational(0));
      return;
    }
    if (sgn(bound_) < 0) return;
    remaining_[n_ - 1] = bound_;
    level(n_ - 1);
  }

 private:
  // Returns false once the visitor asked to stop.
  bool level(std::size_t i) {
    Rational shift = 0;
    for (std::size_t j = i + 1; j < n_; ++j) shift += q_(i, j) * x_[j];
    const Rational radius_sq = remaining_[i] / q_(i, i);
    const Integer s = isqrt_floor(radius_sq);
    const Integer centre = floor_div(-shift);
    Integer lo = centre - s - 1;
    Integer hi = centre + s + 1;
    Rational d;
    for (Integer xi = lo; xi <= hi; ++xi) {
      d = xi + shift;
      Rational sq = d * d;
      if (sq > radius_sq) continue;
      x_[i] = xi;
      Rational rest = remaining_[i] - q_(i, i) * sq;
      if (i == 0) {
        if (!emit(bound_ - rest)) return false;
      } else {
        remaining_[i - 1] = rest;
        if (!level(i - 1)) return false;
      }
    }
    return true;
  }

  bool emit(const Rational& value) {
    for (std::size_t c = 0; c < n_; ++c) {
      orig_[c] = 0;
      for (std::size_t r = 0; r < n_; ++r)
        if (x_[r] != 0) orig_[c] += x_[r] * transform_(r, c);
    }
    return visit_(orig_, value);
  }

  std::size_t n_;
  RatMatrix q_;
  Rational bound_;
  const IntMatrix& transform_;
  const VectorVisitor& visit_;
  std::vector<Integer> x_;
  std::vector<Rational> remaining_;
  std::vector<Integer> orig_;
};

}  // namespace

void enumerate_short_vectors(const RatMatrix& gram, const Rational& bound, const VectorVisitor& visit,
                             bool reduce) {
  if (gram.rows() != gram.cols()) throw UsageError("enumerate_short_vectors: Gram matrix not square");
  if (reduce) {
    ReducedGram red = lll_reduce(gram);
    FinckePohst(red.gram, bound, red.transform, visit).run();
  } else {
    IntMatrix id = IntMatrix::identity(gram.rows());
    FinckePohst(gram, bound, id, visit).run();
  }
}

std::vector<Integer> count_by_value(const RatMatrix& gram, long bound, bool reduce) {
  std::vector<Integer> counts(static_cast<std::size_t>(bound < 0 ? 0 : bound + 1), Integer(0));
  if (bound < 0) return counts;
  enumerate_short_vectors(
      gram, Rational(bound),
      [&](const std::vector<Integer>&, const Rational& value) {
        Integer v = to_integer(value);
        counts[v.get_ui()] += 1;
        return true;
      },
      reduce);
  return counts;
}

}  // namespace wlift

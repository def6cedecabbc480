#include "wlift/lattice.hpp"

namespace wlift {

Lattice Lattice::from_generators(const RatMatrix& generators) {
  Integer den = 1;
  for (std::size_t i = 0; i < generators.rows(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), generators(i, j).get_den_mpz_t());
  IntMatrix scaled(generators.rows(), generators.cols());
  for (std::size_t i = 0; i < generators.rows(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j)
      scaled(i, j) = to_integer(generators(i, j) * den);
  IntMatrix h = hermite_normal_form(scaled);
  Lattice out;
  out.dim_ = generators.cols();
  out.basis_ = RatMatrix(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) {
      out.basis_(i, j) = Rational(h(i, j), den);
      out.basis_(i, j).canonicalize();
    }
  return out;
}

Lattice Lattice::from_generators(const std::vector<std::vector<Rational>>& generators, std::size_t dim) {
  RatMatrix m(generators.size(), dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != dim) throw UsageError("Lattice: generator has wrong dimension");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = generators[i][j];
  }
  Lattice out = from_generators(m);
  out.dim_ = dim;
  return out;
}

std::vector<Rational> Lattice::coordinates(const std::vector<Rational>& v) const {
  if (v.size() != dim_) throw UsageError("Lattice::coordinates: dimension mismatch");
  // Solve c * basis = v via the transposed system.
  const std::size_t r = rank();
  RatMatrix aug(dim_, r + 1);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t i = 0; i < r; ++i) aug(j, i) = basis_(i, j);
    aug(j, r) = v[j];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == r) throw UsageError("vector not in the span of the lattice");
  std::vector<Rational> c(r, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) c[pivots[k]] = aug(k, r);
  return c;
}

bool Lattice::contains(const std::vector<Rational>& v) const {
  try {
    for (const auto& c : coordinates(v))
      if (!is_integral(c)) return false;
    return true;
  } catch (const UsageError&) {
    return false;
  }
}

bool Lattice::contains(const Lattice& other) const {
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Rational Lattice::covolume() const {
  if (rank() != dim_) throw UsageError("covolume of a lattice that is not full rank");
  return abs(determinant(basis_));
}

Lattice Lattice::operator+(const Lattice& other) const {
  if (dim_ != other.dim_) throw UsageError("Lattice sum: dimension mismatch");
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < rank(); ++i) gens.push_back(basis_.row(i));
  for (std::size_t i = 0; i < other.rank(); ++i) gens.push_back(other.basis_.row(i));
  return from_generators(gens, dim_);
}

Lattice Lattice::scaled(const Rational& c) const {
  RatMatrix m = basis_;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= c;
  Lattice out = from_generators(m);
  out.dim_ = dim_;
  return out;
}

Lattice Lattice::dual() const {
  if (rank() != dim_) throw UsageError("dual of a lattice that is not full rank");
  Lattice out = from_generators(inverse(basis_).transpose());
  out.dim_ = dim_;
  return out;
}

Lattice Lattice::intersect(const Lattice& other) const {
  // (A cap B)^# = A^# + B^#
  return (dual() + other.dual()).dual();
}

}  // namespace wlift

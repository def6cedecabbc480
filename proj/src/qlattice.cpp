#include "wlift/qlattice.hpp"

namespace wlift {

QLattice::QLattice(const Algebra& alg, Lattice lat) : alg_(alg), lat_(std::move(lat)) {
  if (lat_.dim() != 4) throw UsageError("QLattice: lattice must live in Q^4");
}

QLattice QLattice::from_generators(const Algebra& alg, const std::vector<Quaternion>& gens) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(g.to_vector());
  return {alg, Lattice::from_generators(rows, 4)};
}

QLattice QLattice::standard_order(const Algebra& alg) {
  return {alg, Lattice::from_generators(RatMatrix::identity(4))};
}

std::vector<Quaternion> QLattice::basis() const {
  std::vector<Quaternion> out;
  for (std::size_t r = 0; r < lat_.rank(); ++r) out.push_back(Quaternion::from_vector(alg_, lat_.basis().row(r)));
  return out;
}

RatMatrix norm_gram(const std::vector<Quaternion>& elems) {
  RatMatrix g(elems.size(), elems.size());
  for (std::size_t r = 0; r < elems.size(); ++r)
    for (std::size_t s = r; s < elems.size(); ++s) {
      g(r, s) = norm_pairing(elems[r], elems[s]);
      g(s, r) = g(r, s);
    }
  return g;
}

RatMatrix QLattice::gram() const { return norm_gram(basis()); }

Rational QLattice::norm() const {
  RatMatrix g = gram();
  std::vector<Rational> vals;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    vals.push_back(g(r, r));
    for (std::size_t s = r + 1; s < g.cols(); ++s) vals.push_back(2 * g(r, s));
  }
  return rational_gcd(vals);
}

Rational QLattice::reduced_discriminant() const {
  RatMatrix g = gram();
  // tr(x conj y) = 2 <x,y>, so the trace-form determinant is 16 det(gram).
  Rational d = abs(16 * determinant(g));
  Integer n, m;
  if (!mpz_perfect_square_p(d.get_num_mpz_t()) || !mpz_perfect_square_p(d.get_den_mpz_t()))
    throw InternalError("trace-form determinant is not a square: " + d.get_str());
  mpz_sqrt(n.get_mpz_t(), d.get_num_mpz_t());
  mpz_sqrt(m.get_mpz_t(), d.get_den_mpz_t());
  Rational out(n, m);
  out.canonicalize();
  return out;
}

QLattice QLattice::conj() const {
  std::vector<Quaternion> gens;
  for (const auto& b : basis()) gens.push_back(b.conj());
  return from_generators(alg_, gens);
}

QLattice operator*(const QLattice& a, const QLattice& b) {
  if (!(a.alg_ == b.alg_)) throw UsageError("lattice product across presentations");
  std::vector<Quaternion> gens;
  const auto ba = a.basis();
  const auto bb = b.basis();
  for (const auto& x : ba)
    for (const auto& y : bb) gens.push_back(x * y);
  return QLattice::from_generators(a.alg_, gens);
}

QLattice left_multiply(const Quaternion& x, const QLattice& lat) {
  std::vector<Quaternion> gens;
  for (const auto& b : lat.basis()) gens.push_back(x * b);
  return QLattice::from_generators(lat.algebra(), gens);
}

QLattice right_multiply(const QLattice& lat, const Quaternion& x) {
  std::vector<Quaternion> gens;
  for (const auto& b : lat.basis()) gens.push_back(b * x);
  return QLattice::from_generators(lat.algebra(), gens);
}

QLattice QLattice::left_order() const {
  // {x : x b in L for all b} = intersection of L b^{-1}.
  std::optional<QLattice> acc;
  for (const auto& b : basis()) {
    QLattice piece = right_multiply(*this, b.inverse());
    acc = acc ? acc->intersect(piece) : piece;
  }
  return *acc;
}

QLattice QLattice::right_order() const {
  std::optional<QLattice> acc;
  for (const auto& b : basis()) {
    QLattice piece = left_multiply(b.inverse(), *this);
    acc = acc ? acc->intersect(piece) : piece;
  }
  return *acc;
}

bool QLattice::is_order() const {
  if (!contains(Quaternion::scalar(alg_, 1))) return false;
  const auto bs = basis();
  for (const auto& b : bs)
    if (!is_integral(b.norm()) || !is_integral(b.trace())) return false;
  for (const auto& x : bs)
    for (const auto& y : bs)
      if (!contains(x * y)) return false;
  return true;
}

}  // namespace wlift

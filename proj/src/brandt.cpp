#include "wlift/brandt.hpp"

#include <algorithm>
#include <string>

#include "wlift/enumerate.hpp"

namespace wlift {

BrandtModule::BrandtModule(ClassSet classes, std::int64_t max_index)
    : classes_(std::move(classes)), max_index_(max_index) {
  if (max_index_ < 1) throw UsageError("BrandtModule: max_index must be positive");
  const std::size_t h = classes_.size();
  counts_.assign(h, std::vector<std::vector<Integer>>(h));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i; j < h; ++j) {
      const auto& a = classes_.ideals[i];
      const auto& b = classes_.ideals[j];
      const QLattice prod = a.lattice * b.lattice.conj();
      RatMatrix g = prod.gram();
      const Rational scale = 1 / (a.norm * b.norm);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s) g(r, s) *= scale;
      counts_[i][j] = count_by_value(g, max_index_);
      // conj maps I_i conj(I_j) onto I_j conj(I_i) preserving norms.
      counts_[j][i] = counts_[i][j];
    }
  }
}

const Integer& BrandtModule::inclusion_count(std::size_t i, std::size_t j, std::int64_t m) const {
  if (m < 0 || m > max_index_) throw UsageError("inclusion_count: index beyond precomputed bound");
  return counts_.at(i).at(j).at(static_cast<std::size_t>(m));
}

HeckeMatrix BrandtModule::brandt_matrix(std::int64_t p) const {
  if (!is_prime(p)) throw UsageError("brandt_matrix: " + std::to_string(p) + " is not prime");
  if (p > max_index_)
    throw UsageError("brandt_matrix: p = " + std::to_string(p) + " exceeds the precomputed bound " +
                     std::to_string(max_index_));
  const std::size_t h = dimension();
  HeckeMatrix out{p, level() % p == 0 ? HeckeKind::Up : HeckeKind::Tp, IntMatrix(h, h)};
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      // Sub-ideals of I_j in the class of I_i: count / |units of O_L(I_i)|.
      const Integer& c = counts_[i][j][static_cast<std::size_t>(p)];
      const int w = classes_.weights[i];
      if (c % w != 0) throw InternalError("brandt_matrix: inclusion count not divisible by unit weight");
      out.entries(i, j) = c / w;
    }
  return out;
}

IntMatrix neighbor_matrix(const ClassSet& classes, std::int64_t p) {
  if (classes.level() % p == 0) throw UsageError("neighbor_matrix: p must not divide the level");
  const std::size_t h = classes.size();
  IntMatrix out(h, h);
  for (std::size_t j = 0; j < h; ++j) {
    for (const auto& nb : p_neighbors(classes.ideals[j], classes.order.lattice, p)) {
      auto i = classes.find_class(nb);
      if (!i) throw InternalError("neighbor_matrix: neighbor outside the class set");
      out(*i, j) += 1;
    }
  }
  return out;
}

QLattice two_sided_prime(const QLattice& order, std::int64_t p) {
  RatMatrix trace_gram = order.gram();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 0; s < 4; ++s) trace_gram(r, s) *= 2;
  const RatMatrix dual_basis = inverse(trace_gram) * order.lattice().basis();
  const QLattice dual(order.algebra(), Lattice::from_generators(dual_basis));
  QLattice prime = order.intersect(dual.scaled(p));
  if (prime.norm() != p) throw UsageError("two_sided_prime: p must divide the level of the order");
  return prime;
}

IntMatrix atkin_lehner_involution(const BrandtModule& module, std::int64_t p) {
  const ClassSet& cs = module.classes();
  if (cs.level() % p != 0) throw UsageError("atkin_lehner_involution: p must divide the level");
  const QLattice prime = two_sided_prime(cs.order.lattice, p);
  const std::size_t h = cs.size();
  IntMatrix out(h, h);
  for (std::size_t j = 0; j < h; ++j) {
    const QLattice image = cs.ideals[j].lattice * prime;
    auto i = cs.find_class({image, LatticeKind::RightIdeal, 1, cs.ideals[j].norm * p});
    if (!i) throw InternalError("atkin_lehner_involution: image ideal outside the class set");
    out(*i, j) = 1;
  }
  return out;
}

Rational pairing(const BrandtModule& module, const RationalVector& u, const RationalVector& v) {
  const std::size_t h = module.dimension();
  if (u.size() != h || v.size() != h) throw UsageError("pairing: vector length does not match class number");
  Rational s = 0;
  for (std::size_t i = 0; i < h; ++i) s += u[i] * v[i] * module.classes().weights[i];
  return s;
}

RatMatrix joint_eigenspace(const BrandtModule& module, const Eigendata& eigendata) {
  const std::size_t h = module.dimension();
  RatMatrix stacked(eigendata.size() * h, h);
  for (std::size_t k = 0; k < eigendata.size(); ++k) {
    const auto& [p, a] = eigendata[k];
    const IntMatrix b = module.brandt_matrix(p).entries;
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) stacked(k * h + i, j) = Rational(b(i, j) - (i == j ? a : Integer(0)));
  }
  return right_kernel(stacked);
}

RationalVector eigenvectors(const BrandtModule& module, const Eigendata& eigendata) {
  if (eigendata.empty()) throw UsageError("eigenvectors: empty eigendata");
  RatMatrix ker = joint_eigenspace(module, eigendata);
  if (ker.rows() == 0) throw UsageError("no such eigenform");
  if (ker.rows() > 1)
    throw UsageError("underdetermined eigendata: residual dimension " + std::to_string(ker.rows()));
  return normalize_phi(ker.row(0));
}

Rational eigenvalue(const BrandtModule& module, const RationalVector& phi, std::int64_t p) {
  if (phi.size() != module.dimension()) throw UsageError("eigenvalue: vector length does not match class number");
  const RationalVector image = to_rational(module.brandt_matrix(p).entries).apply(phi);
  auto lead = std::find_if(phi.begin(), phi.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (lead == phi.end()) throw UsageError("eigenvalue: zero vector");
  const Rational lambda = image[static_cast<std::size_t>(lead - phi.begin())] / *lead;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (image[i] != lambda * phi[i])
      throw UsageError("vector is not an eigenvector of B(" + std::to_string(p) + ")");
  return lambda;
}

int atkin_lehner_sign(const BrandtModule& module, const RationalVector& phi, std::int64_t p) {
  if (module.level() % p != 0) throw UsageError("atkin_lehner_sign: p must divide the level");
  const Rational a = eigenvalue(module, phi, p);
  if (a == 1) return -1;
  if (a == -1) return 1;
  throw UsageError("atkin_lehner_sign: U_" + std::to_string(p) + " eigenvalue " + a.get_str() +
                   " is not +-1 (vector is not p-new)");
}

bool is_degree_zero(const RationalVector& phi) {
  Rational s = 0;
  for (const auto& x : phi) s += x;
  return sgn(s) == 0;
}

std::vector<Eigensystem> discover_rational_eigensystems(const BrandtModule& module, std::int64_t split_bound) {
  const std::size_t h = module.dimension();
  std::vector<RatMatrix> pending{RatMatrix::identity(h)};
  std::vector<RatMatrix> done;
  for (auto p : primes_up_to(std::min(split_bound, module.max_index()))) {
    if (module.level() % p == 0) continue;
    const RatMatrix t = to_rational(module.brandt_matrix(p).entries);
    const long r = isqrt_floor(Rational(4 * p)).get_si();
    std::vector<long> candidates;
    for (long a = -r; a <= r; ++a) candidates.push_back(a);
    candidates.push_back(p + 1);
    std::vector<RatMatrix> next;
    for (const auto& space : pending) {
      // space rows span a T-stable subspace; split it by each integer eigenvalue.
      for (long a : candidates) {
        RatMatrix shifted = t;
        for (std::size_t i = 0; i < h; ++i) shifted(i, i) -= a;
        const RatMatrix coeffs = right_kernel(shifted * space.transpose());
        if (coeffs.rows() == 0) continue;
        RatMatrix sub = coeffs * space;
        (sub.rows() == 1 ? done : next).push_back(std::move(sub));
      }
    }
    pending = std::move(next);
    if (pending.empty()) break;
  }
  std::vector<Eigensystem> out;
  for (const auto& space : done) {
    Eigensystem es;
    es.phi = normalize_phi(space.row(0));
    for (auto p : primes_up_to(module.max_index()))
      es.eigenvalues.emplace_back(p, to_integer(eigenvalue(module, es.phi, p)));
    const auto& [p0, a0] = es.eigenvalues.front();
    es.eisenstein = !is_degree_zero(es.phi) || (module.level() % p0 != 0 && a0 == p0 + 1);
    out.push_back(std::move(es));
  }
  std::sort(out.begin(), out.end(), [](const Eigensystem& a, const Eigensystem& b) {
    if (a.eisenstein != b.eisenstein) return a.eisenstein;
    return a.eigenvalues < b.eigenvalues;
  });
  return out;
}

}  // namespace wlift

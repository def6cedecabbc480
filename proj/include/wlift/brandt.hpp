#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wlift/lift.hpp"
#include "wlift/matrix.hpp"
#include "wlift/orders.hpp"

namespace wlift {

enum class HeckeKind { Tp, Up };

/// Hecke operator at p on functions on the class set, in the convention where
/// the weighted pairing <y_i, y_j> = w_j delta_ij makes T_p self-adjoint:
/// entry (i, j) is the number of index-p^2 sub-ideals of I_j lying in the
/// class of I_i (the transpose of the classical Brandt matrix). Columns sum
/// to p + 1 for p not dividing N.
struct HeckeMatrix {
  std::int64_t p = 0;
  HeckeKind kind = HeckeKind::Tp;
  IntMatrix entries;
};

using RationalVector = std::vector<Rational>;
using Eigendata = std::vector<std::pair<std::int64_t, Integer>>;

class BrandtModule {
 public:
  /// Precomputes the inclusion counts needed for every B(m), m <= max_index.
  BrandtModule(ClassSet classes, std::int64_t max_index);

  const ClassSet& classes() const { return classes_; }
  std::size_t dimension() const { return classes_.size(); }
  std::int64_t max_index() const { return max_index_; }
  std::int64_t level() const { return classes_.level(); }

  /// Hecke matrix at the prime p (kind U_p when p | N).
  HeckeMatrix brandt_matrix(std::int64_t p) const;

  /// #{x in I_i conj(I_j) : Nm(x) = m Nm(I_i) Nm(I_j)}; symmetric in (i, j).
  const Integer& inclusion_count(std::size_t i, std::size_t j, std::int64_t m) const;

 private:
  ClassSet classes_;
  std::int64_t max_index_;
  std::vector<std::vector<std::vector<Integer>>> counts_;
};

/// Same operator built from explicit p-neighbors and class identification;
/// independent of the element-counting route in BrandtModule.
IntMatrix neighbor_matrix(const ClassSet& classes, std::int64_t p);

/// Two-sided R-ideal of reduced norm p for a prime p | N: R cap p R^#, with
/// R^# the dual of R under the trace form.
QLattice two_sided_prime(const QLattice& order, std::int64_t p);

/// Permutation matrix of the quaternionic Atkin-Lehner involution
/// I_i -> I_i P at p | N (same (i, j) convention as HeckeMatrix).
IntMatrix atkin_lehner_involution(const BrandtModule& module, std::int64_t p);

/// sum_i u_i v_i w_i.
Rational pairing(const BrandtModule& module, const RationalVector& u, const RationalVector& v);

/// Primitive-integral basis vector of the joint eigenspace
/// cap_p ker(B(p) - a_p). Throws UsageError("no such eigenform") if the
/// intersection is zero and UsageError("underdetermined ...") if its
/// dimension exceeds one.
RationalVector eigenvectors(const BrandtModule& module, const Eigendata& eigendata);

/// Basis (rows) of the joint eigenspace, possibly empty.
RatMatrix joint_eigenspace(const BrandtModule& module, const Eigendata& eigendata);

/// lambda with B(p) phi = lambda phi; UsageError if phi is not an eigenvector.
Rational eigenvalue(const BrandtModule& module, const RationalVector& phi, std::int64_t p);

/// Atkin-Lehner sign at p | N: U_p acts on a p-new eigenvector by a_p = -w_p.
int atkin_lehner_sign(const BrandtModule& module, const RationalVector& phi, std::int64_t p);

/// True iff sum_i phi_i = 0 (orthogonal to the Eisenstein vector (1/w_i)).
bool is_degree_zero(const RationalVector& phi);

/// A rational eigensystem found by exhaustive search: eigenvector plus its
/// eigenvalue at every prime up to the module's bound.
struct Eigensystem {
  RationalVector phi;
  Eigendata eigenvalues;
  bool eisenstein = false;
};

/// All one-dimensional joint eigenspaces with integer eigenvalues, splitting
/// successively by T_p for primes p not dividing N up to `split_bound`.
std::vector<Eigensystem> discover_rational_eigensystems(const BrandtModule& module, std::int64_t split_bound);

}  // namespace wlift

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wlift/qlattice.hpp"

namespace wlift {

enum class LatticeKind { MaximalOrder, EichlerOrder, RightIdeal };

/// A rank-4 lattice in B tagged with its role. `level` is meaningful for
/// orders, `norm` for right ideals.
struct OrderLattice {
  QLattice lattice;
  LatticeKind kind = LatticeKind::MaximalOrder;
  Integer level = 1;
  Rational norm = 1;
};

/// Maximal order containing Z<1,i,j,k>, found by repeated p-saturation.
/// Its reduced discriminant is the product of the finite ramified primes.
OrderLattice maximal_order(const Algebra& alg);

/// Eichler order of level q*M inside a maximal order of discriminant q.
OrderLattice eichler_order(const OrderLattice& maximal, std::int64_t m);

/// (N/24) * prod_{p | q} (1 - 1/p) * prod_{p | M} (1 + 1/p), N = qM.
Rational eichler_mass(std::int64_t q, std::int64_t m);

/// Smallest prime not dividing n.
std::int64_t smallest_prime_not_dividing(std::int64_t n);

/// Number of elements of reduced norm 1 in an order.
int unit_weight(const QLattice& order);

/// Right ideal I of R viewed as an OrderLattice with its reduced norm.
OrderLattice make_right_ideal(const QLattice& lat);

/// An element x of I * conj(J) with Nm(x) = Nm(I) Nm(J) if one exists;
/// then I = (x / Nm(J)) J.
std::optional<Quaternion> equivalence_witness(const OrderLattice& i, const OrderLattice& j);
bool ideals_equivalent(const OrderLattice& i, const OrderLattice& j);

/// The p + 1 right R-ideals J subset I with [I : J] = p^2 (p not dividing the level).
std::vector<OrderLattice> p_neighbors(const OrderLattice& ideal, const QLattice& right_order, std::int64_t p);

/// Right-ideal classes of an Eichler order. `left_orders[i]` is the left
/// order of ideals[i] (the order B^x cap y_i R^ y_i^{-1}) and `weights[i]` its
/// number of units.
struct ClassSet {
  Algebra algebra;
  std::int64_t q = 0;
  std::int64_t m = 1;
  OrderLattice order;
  std::vector<OrderLattice> ideals;
  std::vector<QLattice> left_orders;
  std::vector<int> weights;
  std::int64_t neighbor_prime = 0;

  std::size_t size() const { return ideals.size(); }
  std::int64_t level() const { return q * m; }
  Rational mass() const;

  /// Index of the class containing `ideal`; nullopt if none matches.
  std::optional<std::size_t> find_class(const OrderLattice& ideal) const;
};

/// Breadth-first p-neighbor traversal from R, stopped when the unit-weighted
/// count reaches the Eichler mass. Class 0 is R itself; the remaining classes
/// are sorted canonically by their trace-zero ternary lattices.
ClassSet right_ideal_classes(const OrderLattice& eichler, std::int64_t q, std::int64_t m);

/// Convenience: presentation, maximal order, Eichler order, classes.
ClassSet build_class_set(std::int64_t q, std::int64_t m);

/// Validates N = qM: q prime, gcd(q, M) = 1, qM squarefree. Throws UsageError.
void validate_level(std::int64_t q, std::int64_t m);

}  // namespace wlift

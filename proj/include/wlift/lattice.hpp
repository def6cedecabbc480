#pragma once

#include <vector>

#include "wlift/matrix.hpp"

namespace wlift {

/// A finitely generated subgroup of Q^d, stored by the (unique) Hermite
/// normal form of its basis. Two lattices compare equal iff they are the same
/// subgroup.
class Lattice {
 public:
  Lattice() = default;

  /// Lattice spanned by the rows of `generators` (need not be independent).
  static Lattice from_generators(const RatMatrix& generators);
  static Lattice from_generators(const std::vector<std::vector<Rational>>& generators, std::size_t dim);

  const RatMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }
  std::size_t dim() const { return dim_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Lattice& other) const;

  /// Coordinates of v with respect to basis(); throws UsageError if v is not
  /// in the rational span.
  std::vector<Rational> coordinates(const std::vector<Rational>& v) const;

  /// |det(basis)| for full-rank lattices.
  Rational covolume() const;

  Lattice operator+(const Lattice& other) const;
  Lattice scaled(const Rational& c) const;

  /// Intersection of two full-rank lattices.
  Lattice intersect(const Lattice& other) const;

  /// Dual lattice with respect to the standard dot product (full rank only).
  Lattice dual() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

 private:
  RatMatrix basis_;
  std::size_t dim_ = 0;
};

}  // namespace wlift

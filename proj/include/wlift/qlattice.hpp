#pragma once

#include <vector>

#include "wlift/lattice.hpp"
#include "wlift/qalg.hpp"

namespace wlift {

/// A full-rank lattice in a quaternion algebra, coordinates in 1, i, j, k.
class QLattice {
 public:
  QLattice() = default;
  QLattice(const Algebra& alg, Lattice lat);

  static QLattice from_generators(const Algebra& alg, const std::vector<Quaternion>& gens);
  /// Z<1, i, j, k>.
  static QLattice standard_order(const Algebra& alg);

  const Algebra& algebra() const { return alg_; }
  const Lattice& lattice() const { return lat_; }
  std::vector<Quaternion> basis() const;

  bool contains(const Quaternion& x) const { return lat_.contains(x.to_vector()); }
  bool contains(const QLattice& other) const { return lat_.contains(other.lat_); }

  /// Gram matrix of the reduced norm on basis(): entry (r,s) = tr(b_r conj(b_s)) / 2.
  RatMatrix gram() const;

  /// Reduced norm of the lattice: the positive generator of the Z-module
  /// spanned by Nm(x), x in the lattice.
  Rational norm() const;

  /// sqrt|det(tr(b_r conj(b_s)))|; for an order this is the reduced discriminant.
  Rational reduced_discriminant() const;

  Rational covolume() const { return lat_.covolume(); }

  QLattice conj() const;
  QLattice scaled(const Rational& c) const { return {alg_, lat_.scaled(c)}; }
  QLattice intersect(const QLattice& other) const { return {alg_, lat_.intersect(other.lat_)}; }
  QLattice operator+(const QLattice& other) const { return {alg_, lat_ + other.lat_}; }

  /// {x : x L subset L} and {x : L x subset L}.
  QLattice left_order() const;
  QLattice right_order() const;

  /// Contains 1, every element integral, closed under multiplication.
  bool is_order() const;

  friend QLattice operator*(const QLattice& a, const QLattice& b);
  friend bool operator==(const QLattice& a, const QLattice& b) {
    return a.alg_ == b.alg_ && a.lat_ == b.lat_;
  }

 private:
  Algebra alg_;
  Lattice lat_;
};

/// x * L (left multiplication of every basis element).
QLattice left_multiply(const Quaternion& x, const QLattice& lat);
QLattice right_multiply(const QLattice& lat, const Quaternion& x);

/// Reduced norm Gram matrix of an arbitrary list of quaternions.
RatMatrix norm_gram(const std::vector<Quaternion>& elems);

}  // namespace wlift

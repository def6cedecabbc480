#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "wlift/arith.hpp"

namespace wlift {

/// The algebra (a,b) over Q with basis 1, i, j, k: i^2 = a, j^2 = b, k = ij = -ji.
struct Algebra {
  std::int64_t a = -1;
  std::int64_t b = -1;

  /// Quadratic-form weights of the reduced norm in the basis 1, i, j, k.
  std::array<Rational, 4> norm_weights() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(const Algebra& alg, std::array<Rational, 4> coords) : alg_(alg), c_(std::move(coords)) {}
  Quaternion(const Algebra& alg, const Rational& t, const Rational& x, const Rational& y, const Rational& z)
      : alg_(alg), c_{t, x, y, z} {}

  static Quaternion scalar(const Algebra& alg, const Rational& t) { return {alg, t, 0, 0, 0}; }
  static Quaternion from_vector(const Algebra& alg, const std::vector<Rational>& v);

  const Algebra& algebra() const { return alg_; }
  const std::array<Rational, 4>& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  std::vector<Rational> to_vector() const { return {c_[0], c_[1], c_[2], c_[3]}; }

  Quaternion conj() const { return {alg_, c_[0], -c_[1], -c_[2], -c_[3]}; }
  Rational trace() const { return 2 * c_[0]; }
  Rational norm() const;
  bool is_zero() const;

  /// Inverse; throws UsageError for 0.
  Quaternion inverse() const;

  friend Quaternion operator*(const Quaternion& e, const Quaternion& f);
  friend Quaternion operator+(const Quaternion& e, const Quaternion& f);
  friend Quaternion operator-(const Quaternion& e, const Quaternion& f);
  friend Quaternion operator*(const Rational& s, const Quaternion& e);
  friend bool operator==(const Quaternion& e, const Quaternion& f) {
    return e.alg_ == f.alg_ && e.c_ == f.c_;
  }

 private:
  Algebra alg_;
  std::array<Rational, 4> c_{0, 0, 0, 0};
};

/// tr(x * conj(y)) / 2, the bilinear form attached to the reduced norm.
Rational norm_pairing(const Quaternion& x, const Quaternion& y);

/// A place of Q: a prime, or infinity (represented by 0).
constexpr std::int64_t kInfinity = 0;

/// Hilbert symbol (a,b)_p in {+1,-1}; -1 iff the algebra (a,b) is ramified at p.
int hilbert_symbol(const Rational& a, const Rational& b, std::int64_t p);

/// Sorted list of ramified places (kInfinity first when ramified there).
std::vector<std::int64_t> ramified_places(const Algebra& alg);

/// Negative a, b of smallest height whose algebra is ramified exactly at
/// {q, infinity}, certified place by place.
Algebra choose_presentation(std::int64_t q, std::int64_t max_height = 200);

/// True iff `alg` is definite and its finite ramification is exactly {q}.
bool certify_presentation(const Algebra& alg, std::int64_t q);

}  // namespace wlift

#pragma once

#include <vector>

#include "wlift/theta.hpp"

namespace wlift {

using RationalVector = std::vector<Rational>;

/// Scale to integers with gcd 1 and first nonzero entry positive.
RationalVector normalize_phi(const RationalVector& phi);

/// sum_i phi_i theta_i together with the integral phi that produced it.
/// `primitive_scale` is the integer c with phi = c * normalize_phi(phi) up
/// to sign (1 for a primitive phi).
struct LiftResult {
  QSeries series;
  RationalVector phi;
  Integer primitive_scale = 1;
  std::size_t class_count = 0;
};

/// Exact linear combination sum_i phi_i theta_i truncated at the smallest
/// theta bound. phi must have integer entries.
LiftResult waldspurger_lift(const RationalVector& phi, const std::vector<QSeries>& thetas);

}  // namespace wlift

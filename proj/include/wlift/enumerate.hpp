#pragma once

#include <functional>
#include <vector>

#include "wlift/matrix.hpp"

namespace wlift {

/// Gram matrix after LLL reduction. Row i of `transform` gives the i-th
/// reduced basis vector in the original coordinates, so
/// gram == transform * original * transform^T.
struct ReducedGram {
  RatMatrix gram;
  IntMatrix transform;
};

/// LLL reduction (delta = 3/4) of a positive-definite rational Gram matrix,
/// carried out in exact arithmetic.
ReducedGram lll_reduce(const RatMatrix& gram);

/// Callback for enumerated vectors: coordinates in the caller's basis and
/// the exact value x^T G x. Return false to stop the enumeration early.
using VectorVisitor = std::function<bool(const std::vector<Integer>&, const Rational&)>;

/// Visits every integer vector x (including 0) with x^T G x <= bound, using
/// Fincke-Pohst bounding from an exact rational LDL^T decomposition. When
/// `reduce` is set the search runs in an LLL-reduced basis; coordinates
/// handed to the visitor are always in the original basis.
void enumerate_short_vectors(const RatMatrix& gram, const Rational& bound, const VectorVisitor& visit,
                             bool reduce = true);

/// counts[n] = #{x : x^T G x == n} for 0 <= n <= bound. The form must take
/// integer values.
std::vector<Integer> count_by_value(const RatMatrix& gram, long bound, bool reduce = true);

/// True iff every leading principal minor is positive.
bool is_positive_definite(const RatMatrix& gram);

}  // namespace wlift

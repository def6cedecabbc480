#include "wlift/lift.hpp"

#include <algorithm>

namespace wlift {

RationalVector normalize_phi(const RationalVector& phi) {
  const Rational g = rational_gcd(phi);
  if (sgn(g) == 0) throw UsageError("normalize_phi: zero vector");
  RationalVector out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = phi[i] / g;
  auto lead = std::find_if(out.begin(), out.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (sgn(*lead) < 0)
    for (auto& x : out) x = -x;
  return out;
}

LiftResult waldspurger_lift(const RationalVector& phi, const std::vector<QSeries>& thetas) {
  if (phi.size() != thetas.size())
    throw UsageError("waldspurger_lift: " + std::to_string(phi.size()) + " coefficients for " +
                     std::to_string(thetas.size()) + " theta series");
  if (thetas.empty()) throw UsageError("waldspurger_lift: empty class set");
  for (const auto& x : phi)
    if (!is_integral(x)) throw UsageError("waldspurger_lift: phi must be integral");
  long bound = thetas.front().bound();
  for (const auto& t : thetas) bound = std::min(bound, t.bound());

  LiftResult out;
  out.series = QSeries(bound);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const Integer c = phi[i].get_num();
    if (c == 0) continue;
    for (long n = 0; n <= bound; ++n) out.series[n] += c * thetas[i][n];
  }
  out.phi = phi;
  const Rational g = rational_gcd(phi);
  out.primitive_scale = sgn(g) == 0 ? Integer(0) : to_integer(g);
  out.class_count = phi.size();
  return out;
}

}  // namespace wlift

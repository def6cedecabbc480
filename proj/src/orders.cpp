#include "wlift/orders.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "wlift/enumerate.hpp"
#include "wlift/theta.hpp"

namespace wlift {

namespace {

// All c in F_p^n \ {0} whose first nonzero entry is 1.
std::vector<std::vector<long>> projective_points(long p, std::size_t n) {
  std::vector<std::vector<long>> out;
  std::vector<long> c(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    long total = 1;
    for (std::size_t k = 0; k < tail; ++k) total *= p;
    for (long idx = 0; idx < total; ++idx) {
      std::fill(c.begin(), c.end(), 0);
      c[lead] = 1;
      long rem = idx;
      for (std::size_t k = 0; k < tail; ++k) {
        c[lead + 1 + k] = rem % p;
        rem /= p;
      }
      out.push_back(c);
    }
  }
  return out;
}

Quaternion combination(const std::vector<Quaternion>& basis, const std::vector<long>& c) {
  Quaternion acc = Quaternion::scalar(basis.front().algebra(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (c[k] != 0) acc = acc + Rational(c[k]) * basis[k];
  return acc;
}

bool norm_form_integral(const QLattice& lat) {
  RatMatrix g = lat.gram();
  for (std::size_t r = 0; r < 4; ++r) {
    if (!is_integral(g(r, r))) return false;
    for (std::size_t s = r + 1; s < 4; ++s)
      if (!is_integral(2 * g(r, s))) return false;
  }
  for (const auto& b : lat.basis())
    if (!is_integral(b.trace())) return false;
  return true;
}

// The order generated by `order` and x, if that ring is an order.
std::optional<QLattice> adjoin(const QLattice& order, const Quaternion& x) {
  std::vector<Quaternion> gens = order.basis();
  gens.push_back(x);
  QLattice lat = QLattice::from_generators(order.algebra(), gens);
  for (int step = 0; step < 12; ++step) {
    if (!norm_form_integral(lat)) return std::nullopt;
    QLattice next = lat * lat;
    if (next == lat) return lat.is_order() ? std::optional<QLattice>(lat) : std::nullopt;
    lat = next;
  }
  return std::nullopt;
}

std::optional<QLattice> saturate_at(const QLattice& order, std::int64_t p) {
  const auto basis = order.basis();
  const Rational inv_p(1, p);
  for (const auto& c : projective_points(p, 4)) {
    Quaternion x = inv_p * combination(basis, c);
    if (!is_integral(x.trace()) || !is_integral(x.norm())) continue;
    if (auto bigger = adjoin(order, x)) return bigger;
  }
  return std::nullopt;
}

Integer finite_discriminant(const Algebra& alg) {
  Integer d = 1;
  for (auto p : ramified_places(alg))
    if (p != kInfinity) d *= p;
  return d;
}

}  // namespace

OrderLattice maximal_order(const Algebra& alg) {
  if (alg.a >= 0 || alg.b >= 0) throw UsageError("maximal_order: presentation must be definite");
  const Integer target = finite_discriminant(alg);
  QLattice order = QLattice::standard_order(alg);
  for (int guard = 0; guard < 64; ++guard) {
    Integer disc = to_integer(order.reduced_discriminant());
    if (disc == target) return {order, LatticeKind::MaximalOrder, target, 1};
    if (disc % target != 0) throw InternalError("maximal_order: discriminant lost a ramified prime");
    bool grew = false;
    for (auto p : prime_factors(Integer(disc / target))) {
      if (auto bigger = saturate_at(order, p)) {
        order = *bigger;
        grew = true;
        break;
      }
    }
    if (!grew)
      throw InternalError("maximal_order: saturation failed at discriminant " + disc.get_str());
  }
  throw InternalError("maximal_order: saturation did not terminate");
}

void validate_level(std::int64_t q, std::int64_t m) {
  if (!is_prime(q)) throw UsageError("q = " + std::to_string(q) + " is not prime");
  if (m < 1) throw UsageError("M must be a positive integer");
  if (std::gcd(q, m) != 1) throw UsageError("M = " + std::to_string(m) + " is not coprime to q");
  if (!is_squarefree(q * m)) throw UsageError("N = " + std::to_string(q * m) + " is not squarefree");
}

OrderLattice eichler_order(const OrderLattice& maximal, std::int64_t m) {
  const Integer q = maximal.level;
  if (m < 1) throw UsageError("eichler_order: M must be positive");
  if (!q.fits_slong_p()) throw UsageError("eichler_order: discriminant too large");
  validate_level(q.get_si(), m);
  if (m == 1) return maximal;
  const QLattice& o = maximal.lattice;
  const auto basis = o.basis();
  const Algebra& alg = o.algebra();
  QLattice eichler = o;
  for (auto p : prime_factors(m)) {
    std::optional<QLattice> local;
    for (const auto& c : projective_points(p, 4)) {
      Quaternion x = combination(basis, c);
      if (to_integer(x.norm()) % p != 0) continue;
      // x O + p O is a right ideal of norm p; Z + (x O + p O) has index p in O.
      QLattice ideal = left_multiply(x, o) + o.scaled(p);
      if (ideal.covolume() != o.covolume() * p * p) continue;
      local = QLattice::from_generators(alg, {Quaternion::scalar(alg, 1)}) + ideal;
      break;
    }
    if (!local) throw InternalError("eichler_order: no zero divisor found modulo " + std::to_string(p));
    eichler = eichler.intersect(*local);
  }
  const Integer level = q * m;
  if (!eichler.is_order() || eichler.reduced_discriminant() != Rational(level))
    throw InternalError("eichler_order: result does not have reduced discriminant " + level.get_str());
  return {eichler, LatticeKind::EichlerOrder, level, 1};
}

Rational eichler_mass(std::int64_t q, std::int64_t m) {
  validate_level(q, m);
  Rational mass(q * m, 24);
  mass *= Rational(q - 1, q);
  for (auto p : prime_factors(m)) mass *= Rational(p + 1, p);
  mass.canonicalize();
  return mass;
}

std::int64_t smallest_prime_not_dividing(std::int64_t n) {
  for (std::int64_t p = 2;; ++p)
    if (is_prime(p) && n % p != 0) return p;
}

int unit_weight(const QLattice& order) {
  int count = 0;
  enumerate_short_vectors(order.gram(), Rational(1), [&](const std::vector<Integer>&, const Rational& v) {
    if (v == 1) ++count;
    return true;
  });
  return count;
}

OrderLattice make_right_ideal(const QLattice& lat) {
  return {lat, LatticeKind::RightIdeal, 1, lat.norm()};
}

std::optional<Quaternion> equivalence_witness(const OrderLattice& i, const OrderLattice& j) {
  const QLattice prod = i.lattice * j.lattice.conj();
  const Rational target = i.norm * j.norm;
  const auto basis = prod.basis();
  std::optional<Quaternion> found;
  enumerate_short_vectors(prod.gram(), target, [&](const std::vector<Integer>& c, const Rational& v) {
    if (v != target) return true;
    Quaternion x = Quaternion::scalar(prod.algebra(), 0);
    for (std::size_t k = 0; k < 4; ++k) x = x + Rational(c[k]) * basis[k];
    found = x;
    return false;
  });
  return found;
}

bool ideals_equivalent(const OrderLattice& i, const OrderLattice& j) {
  return equivalence_witness(i, j).has_value();
}

std::vector<OrderLattice> p_neighbors(const OrderLattice& ideal, const QLattice& right_order, std::int64_t p) {
  const auto basis = ideal.lattice.basis();
  const QLattice p_ideal = ideal.lattice.scaled(p);
  const Rational modulus = ideal.norm * p;
  std::vector<OrderLattice> out;
  for (const auto& c : projective_points(p, 4)) {
    Quaternion alpha = combination(basis, c);
    if (!is_integral(alpha.norm() / modulus)) continue;
    QLattice j = left_multiply(alpha, right_order) + p_ideal;
    if (std::any_of(out.begin(), out.end(), [&](const OrderLattice& o) { return o.lattice == j; })) continue;
    out.push_back({j, LatticeKind::RightIdeal, 1, modulus});
  }
  if (out.size() != static_cast<std::size_t>(p + 1))
    throw InternalError("p_neighbors: expected " + std::to_string(p + 1) + " neighbors, found " +
                        std::to_string(out.size()));
  return out;
}

Rational ClassSet::mass() const {
  Rational s = 0;
  for (int w : weights) s += Rational(1, w);
  return s;
}

std::optional<std::size_t> ClassSet::find_class(const OrderLattice& ideal) const {
  for (std::size_t k = 0; k < ideals.size(); ++k)
    if (ideals_equivalent(ideal, ideals[k])) return k;
  return std::nullopt;
}

namespace {

struct SortKey {
  std::array<long, 6> gram_key;
  std::vector<Integer> theta;
  bool operator<(const SortKey& o) const {
    if (gram_key != o.gram_key) return gram_key < o.gram_key;
    return theta < o.theta;
  }
};

void sort_classes(ClassSet& cs) {
  const std::size_t h = cs.size();
  if (h <= 2) return;
  std::vector<SortKey> keys(h);
  for (std::size_t k = 1; k < h; ++k) {
    TernaryLattice t = trace_zero_lattice(cs.left_orders[k]);
    keys[k] = {canonical_gram_key(t.gram), theta_series(t, 40).coeffs()};
  }
  std::vector<std::size_t> idx(h);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin() + 1, idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  ClassSet sorted = cs;
  for (std::size_t k = 0; k < h; ++k) {
    sorted.ideals[k] = cs.ideals[idx[k]];
    sorted.left_orders[k] = cs.left_orders[idx[k]];
    sorted.weights[k] = cs.weights[idx[k]];
  }
  cs = std::move(sorted);
}

}  // namespace

ClassSet right_ideal_classes(const OrderLattice& eichler, std::int64_t q, std::int64_t m) {
  validate_level(q, m);
  const QLattice& r = eichler.lattice;
  if (r.reduced_discriminant() != Rational(q * m))
    throw UsageError("right_ideal_classes: order does not have level " + std::to_string(q * m));
  ClassSet cs;
  cs.algebra = r.algebra();
  cs.q = q;
  cs.m = m;
  cs.order = eichler;
  cs.neighbor_prime = smallest_prime_not_dividing(q * m);
  const Rational mass = eichler_mass(q, m);

  cs.ideals.push_back(make_right_ideal(r));
  cs.left_orders.push_back(r);
  cs.weights.push_back(unit_weight(r));
  Rational found = Rational(1, cs.weights.back());

  std::deque<std::size_t> frontier{0};
  while (!frontier.empty() && found < mass) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (auto& nb : p_neighbors(cs.ideals[cur], r, cs.neighbor_prime)) {
      if (cs.find_class(nb)) continue;
      QLattice left = nb.lattice.left_order();
      int w = unit_weight(left);
      cs.ideals.push_back(std::move(nb));
      cs.left_orders.push_back(std::move(left));
      cs.weights.push_back(w);
      frontier.push_back(cs.ideals.size() - 1);
      found += Rational(1, w);
      if (found >= mass) break;
    }
  }
  if (found != mass)
    throw InternalError("right_ideal_classes: mass " + found.get_str() + " found, expected " + mass.get_str());
  sort_classes(cs);
  return cs;
}

ClassSet build_class_set(std::int64_t q, std::int64_t m) {
  validate_level(q, m);
  const Algebra alg = choose_presentation(q);
  const OrderLattice o = maximal_order(alg);
  const OrderLattice r = eichler_order(o, m);
  return right_ideal_classes(r, q, m);
}

}  // namespace wlift

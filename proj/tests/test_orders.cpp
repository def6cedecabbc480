#include <map>

#include "doctest.h"
#include "wlift/orders.hpp"

using namespace wlift;

namespace {

// Genus of X_0(p), p prime, from the Riemann-Hurwitz count of elliptic
// points and cusps.
long genus_x0_prime(long p) {
  const long nu2 = p == 2 ? 1 : 1 + legendre(Integer(-1), p);
  const long nu3 = p == 3 ? 1 : 1 + legendre(Integer(-3), p);
  const Rational g = ratio(p + 1, 12) - ratio(nu2, 4) - ratio(nu3, 3);
  return to_integer(g).get_si();
}

}  // namespace

TEST_CASE("maximal orders have reduced discriminant q") {
  for (auto q : primes_up_to(43)) {
    CAPTURE(q);
    const OrderLattice o = maximal_order(choose_presentation(q));
    CHECK(o.lattice.is_order());
    CHECK(o.lattice.reduced_discriminant() == q);
    CHECK(o.lattice.contains(Quaternion::scalar(o.lattice.algebra(), 1)));
  }
}

TEST_CASE("Hurwitz order and its unit group") {
  const OrderLattice o = maximal_order(Algebra{-1, -1});
  CHECK(unit_weight(o.lattice) == 24);
  CHECK(o.lattice.contains(Quaternion(Algebra{-1, -1}, Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2))));
  CHECK(unit_weight(maximal_order(Algebra{-1, -3}).lattice) == 12);
}

TEST_CASE("Eichler orders have reduced discriminant qM") {
  const OrderLattice o17 = maximal_order(choose_presentation(17));
  const OrderLattice e170 = eichler_order(o17, 10);
  CHECK(e170.lattice.reduced_discriminant() == 170);
  CHECK(e170.lattice.is_order());
  const OrderLattice o3 = maximal_order(choose_presentation(3));
  CHECK(eichler_order(o3, 58).lattice.reduced_discriminant() == 174);
  CHECK(eichler_order(o3, 1).lattice == o3.lattice);
  CHECK(eichler_order(o3, 1).level == 3);
}

TEST_CASE("mass formula") {
  CHECK(eichler_mass(17, 10) == 12);
  CHECK(eichler_mass(3, 58) == Rational(15, 2));
  CHECK(eichler_mass(2, 1) == Rational(1, 24));
  CHECK(eichler_mass(3, 1) == Rational(1, 12));
}

TEST_CASE("class numbers of maximal orders are genus(X_0(q)) + 1") {
  for (auto q : primes_up_to(43)) {
    CAPTURE(q);
    const ClassSet cs = build_class_set(q, 1);
    CHECK(static_cast<long>(cs.size()) == genus_x0_prime(q) + 1);
    CHECK(cs.mass() == eichler_mass(q, 1));
  }
}

TEST_CASE("class sets of small Eichler orders satisfy the mass formula") {
  for (auto [q, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {2, 5}, {3, 2}, {5, 6}, {7, 2}, {11, 3}, {2, 15}}) {
    CAPTURE(q);
    CAPTURE(m);
    const ClassSet cs = build_class_set(q, m);
    CHECK(cs.mass() == eichler_mass(q, m));
    CHECK(cs.ideals.front().lattice == cs.order.lattice);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      CHECK(cs.left_orders[i].reduced_discriminant() == q * m);
      CHECK(cs.find_class(cs.ideals[i]) == i);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(ideals_equivalent(cs.ideals[i], cs.ideals[j]));
    }
  }
}

TEST_CASE("p-neighbors") {
  const ClassSet cs = build_class_set(11, 1);
  const auto nbrs = p_neighbors(cs.ideals[0], cs.order.lattice, 2);
  CHECK(nbrs.size() == 3);
  for (const auto& j : nbrs) {
    CHECK(j.norm == 2);
    CHECK(cs.find_class(j).has_value());
  }
}

TEST_CASE("class-set reproduction at levels 170 and 174") {
  const ClassSet a = build_class_set(17, 10);
  CHECK(a.size() == 24);
  for (int w : a.weights) CHECK(w == 2);
  CHECK(a.mass() == 12);
  const ClassSet b = build_class_set(3, 58);
  std::map<int, int> multiset;
  for (int w : b.weights) ++multiset[w];
  CHECK(b.size() == 16);
  CHECK(multiset == std::map<int, int>{{2, 14}, {4, 2}});
  CHECK(b.mass() == Rational(15, 2));
}

TEST_CASE("level validation") {
  CHECK_THROWS_AS(validate_level(4, 1), UsageError);
  CHECK_THROWS_AS(validate_level(3, 3), UsageError);
  CHECK_THROWS_AS(validate_level(3, 4), UsageError);
  CHECK_THROWS_AS(validate_level(3, 0), UsageError);
  CHECK_NOTHROW(validate_level(17, 10));
  CHECK_THROWS_AS(build_class_set(5, 25), UsageError);
}

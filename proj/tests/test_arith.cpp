#include <random>

#include "doctest.h"
#include "wlift/enumerate.hpp"
#include "wlift/lattice.hpp"

using namespace wlift;

TEST_CASE("integer helpers") {
  CHECK(floor_div(Rational(-7, 2)) == -4);
  CHECK(ceil_div(Rational(-7, 2)) == -3);
  CHECK(isqrt_floor(Rational(99)) == 9);
  CHECK(isqrt_floor(Rational(100)) == 10);
  CHECK(isqrt_floor(Rational(1, 4)) == 0);
  CHECK(round_nearest(Rational(5, 2)) == 3);
  CHECK(rational_gcd({Rational(2, 3), Rational(4, 9)}) == Rational(2, 9));
  CHECK(prime_factors(std::int64_t{174}) == std::vector<std::int64_t>{2, 3, 29});
  CHECK(is_squarefree(170));
  CHECK_FALSE(is_squarefree(12));
  CHECK(valuation(Integer(96), 2) == 5);
  CHECK(legendre(Integer(2), 7) == 1);
  CHECK(legendre(Integer(3), 7) == -1);
  CHECK(primes_up_to(20) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19});
}

TEST_CASE("Hermite normal form is canonical and row-equivalent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a(5, 3);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = d(rng);
    auto [h, u, rank] = hermite_with_transform(a);
    CHECK(u * a == h);
    CHECK(determinant(to_rational(u)) * determinant(to_rational(u)) == 1);
    CHECK(rank <= 3);
    // a unimodular shuffle of the rows has the same HNF
    IntMatrix b = a;
    b.swap_rows(0, 4);
    for (std::size_t c = 0; c < 3; ++c) b(1, c) += 3 * b(2, c);
    CHECK(hermite_normal_form(b) == hermite_normal_form(a));
    for (std::size_t r = rank; r < 5; ++r)
      for (std::size_t c = 0; c < 3; ++c) CHECK(h(r, c) == 0);
  }
}

TEST_CASE("lattice sum, intersection and index") {
  const Lattice a = Lattice::from_generators(RatMatrix::from_rows({{2, 0}, {0, 3}}));
  const Lattice b = Lattice::from_generators(RatMatrix::from_rows({{3, 0}, {0, 2}}));
  CHECK((a + b).covolume() == 1);
  CHECK(a.intersect(b).covolume() == 36);
  CHECK(a.contains({Rational(4), Rational(-3)}));
  CHECK_FALSE(a.contains({Rational(1), Rational(0)}));
  CHECK(a.dual().covolume() == Rational(1, 6));
  CHECK(a.scaled(Rational(1, 2)).covolume() == Rational(3, 2));
}

TEST_CASE("LLL keeps the lattice and its Gram determinant") {
  const RatMatrix g = RatMatrix::from_rows({{10, 7, 3}, {7, 9, 5}, {3, 5, 10}});
  const ReducedGram r = lll_reduce(g);
  const RatMatrix t = to_rational(r.transform);
  CHECK(t * g * t.transpose() == r.gram);
  CHECK(determinant(r.gram) == determinant(g));
  CHECK(determinant(t) * determinant(t) == 1);
}

TEST_CASE("short vector enumeration agrees with and without reduction") {
  const RatMatrix g = RatMatrix::from_rows({{6, 2, -1}, {2, 5, 2}, {-1, 2, 7}});
  CHECK(count_by_value(g, 40, true) == count_by_value(g, 40, false));
  CHECK(count_by_value(g, 40)[0] == 1);
}

TEST_CASE("enumeration of the sum of three squares") {
  const auto c = count_by_value(RatMatrix::identity(3), 10);
  const std::vector<long> r3{1, 6, 12, 8, 6, 24, 24, 0, 12, 30, 24};
  for (std::size_t n = 0; n < r3.size(); ++n) CHECK(c[n] == r3[n]);
}

TEST_CASE("matrix kernels and inverses") {
  const RatMatrix m = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  const RatMatrix k = right_kernel(m);
  CHECK(k.rows() == 1);
  for (const auto& x : m.apply(k.row(0))) CHECK(x == 0);
  const RatMatrix inv = inverse(RatMatrix::from_rows({{2, 1}, {5, 3}}));
  CHECK(inv == RatMatrix::from_rows({{3, -1}, {-5, 2}}));
  CHECK_THROWS_AS(inverse(m), UsageError);
}

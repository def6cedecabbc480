#include <random>

#include "doctest.h"
#include "wlift/qalg.hpp"

using namespace wlift;

namespace {

// 2-adic Hilbert symbol by the closed formula in terms of unit parts.
int hilbert_2_closed_form(std::int64_t a, std::int64_t b) {
  auto split = [](std::int64_t x, int& v, std::int64_t& u) {
    v = 0;
    while (x % 2 == 0) {
      x /= 2;
      ++v;
    }
    u = x;
  };
  int va, vb;
  std::int64_t ua, ub;
  split(a, va, ua);
  split(b, vb, ub);
  auto eps = [](std::int64_t u) { return static_cast<int>((((u - 1) / 2) % 2 + 2) % 2); };
  auto omega = [](std::int64_t u) { return static_cast<int>((((u * u - 1) / 8) % 2 + 2) % 2); };
  const int e = eps(ua) * eps(ub) + va * omega(ub) + vb * omega(ua);
  return e % 2 == 0 ? 1 : -1;
}

// Odd p: a x^2 + b y^2 = z^2 has a primitive solution mod p^2, with a, b
// reduced to valuation at most one.
int hilbert_odd_brute_force(std::int64_t a, std::int64_t b, std::int64_t p) {
  auto reduce = [p](std::int64_t x) {
    while (x % (p * p) == 0) x /= p * p;
    return x;
  };
  a = reduce(a);
  b = reduce(b);
  const std::int64_t m = p * p;
  for (std::int64_t x = 0; x < m; ++x)
    for (std::int64_t y = 0; y < m; ++y)
      for (std::int64_t z = 0; z < m; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        if (((a * x * x + b * y * y - z * z) % m + m) % m == 0) return 1;
      }
  return -1;
}

Quaternion random_quaternion(const Algebra& alg, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  const int t = d(rng), den = 1 + (d(rng) + 6) % 3;
  return {alg, ratio(t, den), d(rng), d(rng), ratio(d(rng), 2)};
}

}  // namespace

TEST_CASE("multiplication table of (-1,-1)") {
  const Algebra h{-1, -1};
  const Quaternion i(h, 0, 1, 0, 0), j(h, 0, 0, 1, 0), k(h, 0, 0, 0, 1), one = Quaternion::scalar(h, 1);
  CHECK(i * j == k);
  CHECK(j * i == Rational(-1) * k);
  CHECK(i * i == Rational(-1) * one);
  CHECK(Quaternion(h, 1, 1, 1, 1).norm() == 4);
  CHECK(Quaternion(h, 1, 1, 1, 1).trace() == 2);
}

TEST_CASE("general presentation: i^2 = a, j^2 = b, k^2 = -ab") {
  const Algebra alg{-3, -17};
  const Quaternion i(alg, 0, 1, 0, 0), j(alg, 0, 0, 1, 0), k(alg, 0, 0, 0, 1);
  CHECK(i * i == Quaternion::scalar(alg, -3));
  CHECK(j * j == Quaternion::scalar(alg, -17));
  CHECK(k * k == Quaternion::scalar(alg, -51));
  CHECK(i * j == k);
}

TEST_CASE("norm is multiplicative and conjugation is an anti-involution") {
  std::mt19937 rng(11);
  for (const Algebra alg : {Algebra{-1, -1}, Algebra{-1, -3}, Algebra{-3, -17}, Algebra{-2, -5}}) {
    for (int t = 0; t < 50; ++t) {
      const Quaternion x = random_quaternion(alg, rng), y = random_quaternion(alg, rng);
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK((x * y).conj() == y.conj() * x.conj());
      CHECK(x * x.conj() == Quaternion::scalar(alg, x.norm()));
      CHECK(norm_pairing(x, x) == x.norm());
      if (!x.is_zero()) CHECK(x * x.inverse() == Quaternion::scalar(alg, 1));
    }
  }
}

TEST_CASE("mixing presentations is a usage error") {
  const Quaternion x(Algebra{-1, -1}, 1, 0, 0, 0), y(Algebra{-1, -3}, 1, 0, 0, 0);
  CHECK_THROWS_AS(x * y, UsageError);
  CHECK_THROWS_AS(Quaternion::scalar(Algebra{-1, -1}, 0).inverse(), UsageError);
}

TEST_CASE("2-adic Hilbert symbol matches the closed formula") {
  for (std::int64_t a = -40; a <= 40; ++a)
    for (std::int64_t b = -40; b <= 40; ++b) {
      if (a == 0 || b == 0) continue;
      CAPTURE(a);
      CAPTURE(b);
      CHECK(hilbert_symbol(a, b, 2) == hilbert_2_closed_form(a, b));
    }
}

TEST_CASE("odd Hilbert symbols match a brute-force solvability search") {
  const std::vector<std::int64_t> values{-21, -15, -10, -7, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 14, 45};
  for (std::int64_t p : {3, 5, 7}) {
    for (auto a : values)
      for (auto b : values) {
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(hilbert_symbol(a, b, p) == hilbert_odd_brute_force(a, b, p));
      }
  }
}

TEST_CASE("Hilbert symbol at infinity and the product formula") {
  CHECK(hilbert_symbol(-1, -1, kInfinity) == -1);
  CHECK(hilbert_symbol(-1, 3, kInfinity) == 1);
  for (std::int64_t a = -12; a <= 12; ++a)
    for (std::int64_t b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0) continue;
      int product = hilbert_symbol(a, b, kInfinity);
      for (auto p : primes_up_to(13)) product *= hilbert_symbol(a, b, p);
      CHECK(product == 1);
    }
}

TEST_CASE("presentations ramified exactly at q and infinity") {
  CHECK(choose_presentation(2) == Algebra{-1, -1});
  CHECK(choose_presentation(3) == Algebra{-1, -3});
  CHECK(choose_presentation(17) == Algebra{-3, -17});
  for (auto q : primes_up_to(60)) {
    const Algebra alg = choose_presentation(q);
    CHECK(certify_presentation(alg, q));
    CHECK(ramified_places(alg) == std::vector<std::int64_t>{kInfinity, q});
  }
  CHECK_FALSE(certify_presentation(Algebra{-1, -1}, 3));
  CHECK_THROWS_AS(choose_presentation(15), UsageError);
}

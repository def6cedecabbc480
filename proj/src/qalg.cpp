#include "wlift/qalg.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace wlift {

std::array<Rational, 4> Algebra::norm_weights() const {
  return {Rational(1), Rational(-a), Rational(-b), Rational(a * b)};
}

Quaternion Quaternion::from_vector(const Algebra& alg, const std::vector<Rational>& v) {
  if (v.size() != 4) throw UsageError("quaternion coordinates must have length 4");
  return {alg, v[0], v[1], v[2], v[3]};
}

Rational Quaternion::norm() const {
  const auto w = alg_.norm_weights();
  return w[0] * c_[0] * c_[0] + w[1] * c_[1] * c_[1] + w[2] * c_[2] * c_[2] + w[3] * c_[3] * c_[3];
}

bool Quaternion::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Quaternion Quaternion::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw UsageError("inverse of a zero quaternion");
  Quaternion c = conj();
  return Rational(1) / n * c;
}

namespace {
void require_same(const Quaternion& e, const Quaternion& f) {
  if (!(e.algebra() == f.algebra())) throw UsageError("quaternions from different presentations");
}
}  // namespace

Quaternion operator*(const Quaternion& e, const Quaternion& f) {
  require_same(e, f);
  const Rational a = e.alg_.a;
  const Rational b = e.alg_.b;
  const auto& [t1, x1, y1, z1] = e.c_;
  const auto& [t2, x2, y2, z2] = f.c_;
  return {e.alg_,
          t1 * t2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
          t1 * x2 + x1 * t2 - b * y1 * z2 + b * z1 * y2,
          t1 * y2 + y1 * t2 + a * x1 * z2 - a * z1 * x2,
          t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2};
}

Quaternion operator+(const Quaternion& e, const Quaternion& f) {
  require_same(e, f);
  return {e.alg_, e.c_[0] + f.c_[0], e.c_[1] + f.c_[1], e.c_[2] + f.c_[2], e.c_[3] + f.c_[3]};
}

Quaternion operator-(const Quaternion& e, const Quaternion& f) {
  require_same(e, f);
  return {e.alg_, e.c_[0] - f.c_[0], e.c_[1] - f.c_[1], e.c_[2] - f.c_[2], e.c_[3] - f.c_[3]};
}

Quaternion operator*(const Rational& s, const Quaternion& e) {
  return {e.alg_, s * e.c_[0], s * e.c_[1], s * e.c_[2], s * e.c_[3]};
}

Rational norm_pairing(const Quaternion& x, const Quaternion& y) {
  require_same(x, y);
  const auto w = x.algebra().norm_weights();
  Rational s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += w[i] * x[i] * y[i];
  return s;
}

namespace {

// Split r = p^v * u with u a p-adic unit; returns (v, u as an integer that
// represents the same square class, i.e. numerator * denominator).
std::pair<int, Integer> split_unit(const Rational& r, std::int64_t p) {
  Integer num = r.get_num();
  Integer den = r.get_den();
  int v = 0;
  while (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p))) {
    num /= p;
    ++v;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
    den /= p;
    --v;
  }
  return {v, num * den};
}

int hilbert_odd(const Rational& a, const Rational& b, std::int64_t p) {
  auto [alpha, u] = split_unit(a, p);
  auto [beta, v] = split_unit(b, p);
  int sign = 1;
  // (-1)^{alpha*beta*(p-1)/2} (u/p)^beta (v/p)^alpha
  if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) sign = -sign;
  if (beta & 1) sign *= legendre(u, p);
  if (alpha & 1) sign *= legendre(v, p);
  return sign;
}

// Square class representative at 2: 2^(v mod 2) * (odd part mod 64).
long two_adic_class(const Rational& r) {
  auto [v, u] = split_unit(r, 2);
  Integer m;
  mpz_fdiv_r_ui(m.get_mpz_t(), u.get_mpz_t(), 64);
  long rep = static_cast<long>(m.get_si());
  return (v & 1) ? 2 * rep : rep;
}

// z^2 = a x^2 + b y^2 has a nontrivial 2-adic solution iff it has a primitive
// solution modulo 64 (Hensel: some unit coordinate has derivative of
// valuation <= 2 because a, b are squarefree up to odd units).
int hilbert_two(const Rational& a, const Rational& b) {
  const long ca = two_adic_class(a);
  const long cb = two_adic_class(b);
  constexpr long kMod = 64;
  for (long x = 0; x < 32; ++x) {
    const long ax = ca * x * x;
    for (long y = 0; y < 32; ++y) {
      const long rhs = ((ax + cb * y * y) % kMod + kMod) % kMod;
      for (long z = 0; z < 32; ++z) {
        if ((x | y | z) % 2 == 0) continue;  // primitive: some coordinate odd
        if ((z * z) % kMod == rhs) return 1;
      }
    }
  }
  return -1;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, std::int64_t p) {
  if (sgn(a) == 0 || sgn(b) == 0) throw UsageError("hilbert_symbol: arguments must be nonzero");
  if (p == kInfinity) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  if (!is_prime(p)) throw UsageError("hilbert_symbol: place must be a prime or infinity");
  if (p == 2) return hilbert_two(a, b);
  return hilbert_odd(a, b, p);
}

namespace {
std::set<std::int64_t> candidate_primes(const Algebra& alg, std::int64_t extra) {
  std::set<std::int64_t> ps{2};
  for (auto p : prime_factors(alg.a)) ps.insert(p);
  for (auto p : prime_factors(alg.b)) ps.insert(p);
  if (extra > 1) ps.insert(extra);
  return ps;
}
}  // namespace

std::vector<std::int64_t> ramified_places(const Algebra& alg) {
  std::vector<std::int64_t> out;
  if (hilbert_symbol(alg.a, alg.b, kInfinity) == -1) out.push_back(kInfinity);
  // At primes not dividing 2ab both entries are units and the symbol is +1.
  for (auto p : candidate_primes(alg, 0))
    if (hilbert_symbol(alg.a, alg.b, p) == -1) out.push_back(p);
  return out;
}

bool certify_presentation(const Algebra& alg, std::int64_t q) {
  if (alg.a >= 0 || alg.b >= 0) return false;
  if (hilbert_symbol(alg.a, alg.b, kInfinity) != -1) return false;
  for (auto p : candidate_primes(alg, q)) {
    const int h = hilbert_symbol(alg.a, alg.b, p);
    if ((h == -1) != (p == q)) return false;
  }
  return true;
}

Algebra choose_presentation(std::int64_t q, std::int64_t max_height) {
  if (!is_prime(q)) throw UsageError("choose_presentation: q = " + std::to_string(q) + " is not prime");
  for (std::int64_t height = 1; height <= max_height; ++height) {
    for (std::int64_t small = 1; small <= height; ++small) {
      Algebra alg{-small, -height};
      if (certify_presentation(alg, q)) return alg;
    }
  }
  throw InternalError("choose_presentation: no certified presentation for q = " + std::to_string(q) +
                      " with height <= " + std::to_string(max_height));
}

}  // namespace wlift

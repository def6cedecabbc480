#include "wlift/arith.hpp"

#include <cstdlib>

namespace wlift {

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw UsageError("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_div(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil_div(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer isqrt_floor(const Rational& r) {
  if (sgn(r) < 0) throw UsageError("isqrt_floor of a negative rational");
  // floor(sqrt(n/d)) == floor(isqrt(n*d) / d)
  Integer nd = r.get_num() * r.get_den();
  Integer s;
  mpz_sqrt(s.get_mpz_t(), nd.get_mpz_t());
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), s.get_mpz_t(), r.get_den_mpz_t());
  return out;
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

Integer to_integer(const Rational& r) {
  if (!is_integral(r)) throw InternalError("expected an integer, got " + to_string(r));
  return r.get_num();
}

Integer round_nearest(const Rational& r) { return floor_div(r + Rational(1, 2)); }

Rational rational_gcd(const std::vector<Rational>& xs) {
  Integer num = 0;
  Integer den = 1;
  for (const auto& x : xs) {
    if (sgn(x) == 0) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= bound; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  n = std::llabs(n);
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::int64_t> prime_factors(const Integer& n) {
  Integer m = abs(n);
  if (!m.fits_slong_p()) throw UsageError("prime_factors: integer too large to factor");
  return prime_factors(static_cast<std::int64_t>(m.get_si()));
}

bool is_squarefree(std::int64_t n) {
  n = std::llabs(n);
  if (n == 0) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

int valuation(const Integer& n, std::int64_t p) {
  if (n == 0) throw UsageError("valuation of zero");
  Integer m = n;
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const Rational& r, std::int64_t p) {
  return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

int legendre(const Integer& a, std::int64_t p) {
  Integer pp = p;
  return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace wlift

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wlift {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for caller mistakes: bad arguments, mismatched shapes, invalid levels.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency certificate fails (mass, discriminant, ...).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// num / den in canonical form.
Rational ratio(const Integer& num, const Integer& den);

Integer floor_div(const Rational& r);
Integer ceil_div(const Rational& r);

/// floor(sqrt(r)) for r >= 0.
Integer isqrt_floor(const Rational& r);

bool is_integral(const Rational& r);
Integer to_integer(const Rational& r);  // throws InternalError if r is not integral

/// Nearest integer, ties rounded toward +infinity.
Integer round_nearest(const Rational& r);

/// gcd of a list of rationals as a positive rational (0 for an all-zero list).
Rational rational_gcd(const std::vector<Rational>& xs);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);
std::vector<std::int64_t> prime_factors(std::int64_t n);  // distinct, ascending
std::vector<std::int64_t> prime_factors(const Integer& n);
bool is_squarefree(std::int64_t n);

/// Largest k with p^k | n; n must be nonzero.
int valuation(const Integer& n, std::int64_t p);
int valuation(const Rational& r, std::int64_t p);

/// Legendre symbol (a/p) for odd prime p; 0 when p | a.
int legendre(const Integer& a, std::int64_t p);

std::string to_string(const Rational& r);

}  // namespace wlift

#ifndef ORBSW_NUMERIC_HPP
#define ORBSW_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace orbsw {

// Structural data (backgrounds, cone orders, local invariants, class
// offsets) lives in Int; anything that can grow (binomials, SW sums,
// polynomial coefficients) lives in BigInt, and exact fractions in
// Rational. No floating point anywhere.
using Int = std::int64_t;
using BigInt = mpz_class;
using Rational = mpq_class;

// Floored quotient and remainder: mod_floor(a, m) lies in [0, m) for
// m > 0, matching floor_div so that a == floor_div(a, m) * m + mod_floor(a, m).
Int floor_div(Int a, Int m);
Int mod_floor(Int a, Int m);

Int gcd_nonneg(Int a, Int b);   // gcd(a, 0) == |a|
Int lcm_positive(Int a, Int b); // both arguments must be positive

// num/den reduced to lowest terms with positive denominator.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational rational_of(Int n);

bool is_integer(const Rational& q);
BigInt rational_floor(const Rational& q);
BigInt rational_ceil(const Rational& q);

// Throws DomainError when v does not fit in Int.
Int to_int_checked(const BigInt& v, const char* what);

// x*a + y*b == gcd(a, b) >= 0.
struct ExtGcd {
    BigInt g, x, y;
};
ExtGcd ext_gcd(const BigInt& a, const BigInt& b);

// "p/q", or just "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& v);

} // namespace orbsw

#endif

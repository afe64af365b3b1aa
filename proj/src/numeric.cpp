#include "orbsw/numeric.hpp"

#include <numeric>

#include "orbsw/errors.hpp"

namespace orbsw {

Int floor_div(Int a, Int m) {
    if (m <= 0) throw StructuralError("floor_div: modulus must be positive");
    Int q = a / m;
    if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
    return q;
}

Int mod_floor(Int a, Int m) {
    return a - floor_div(a, m) * m;
}

Int gcd_nonneg(Int a, Int b) {
    return std::gcd(a, b);
}

Int lcm_positive(Int a, Int b) {
    if (a <= 0 || b <= 0) throw StructuralError("lcm_positive: arguments must be positive");
    return std::lcm(a, b);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_of(Int n) {
    return Rational(BigInt(static_cast<long>(n)));
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

BigInt rational_floor(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

BigInt rational_ceil(const Rational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int to_int_checked(const BigInt& v, const char* what) {
    if (!v.fits_slong_p())
        throw DomainError(std::string(what) + ": value out of range");
    return static_cast<Int>(v.get_si());
}

ExtGcd ext_gcd(const BigInt& a, const BigInt& b) {
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const BigInt& v) {
    return v.get_str();
}

} // namespace orbsw

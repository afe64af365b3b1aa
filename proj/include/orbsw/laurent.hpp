#ifndef ORBSW_LAURENT_HPP
#define ORBSW_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "orbsw/numeric.hpp"

namespace orbsw {

// Finite integer Laurent polynomial in one variable t. The map holds
// only nonzero coefficients, keyed by exponent.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(const BigInt& coeff, Int exponent);

    BigInt coeff(Int exponent) const;
    bool is_zero() const { return terms_.empty(); }
    // Lowest/highest exponent carrying a nonzero coefficient; the
    // polynomial must be nonzero.
    Int lowest() const;
    Int highest() const;
    const std::map<Int, BigInt>& terms() const { return terms_; }

    void add_term(Int exponent, const BigInt& coeff);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

private:
    std::map<Int, BigInt> terms_;
};

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_pow(const LaurentPoly& a, Int k); // k >= 0

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return laurent_add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return laurent_sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return laurent_mul(a, b); }

// Coefficients of a formal Laurent series known exactly on [low, upto].
// Exponents below low are genuinely zero; above upto nothing is claimed.
class TruncatedSeries {
public:
    TruncatedSeries(Int low, Int upto, std::vector<BigInt> coeffs);

    Int low() const { return low_; }
    Int upto() const { return upto_; }
    // Zero below low; throws DomainError beyond the truncation bound.
    BigInt coeff(Int exponent) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    LaurentPoly as_poly() const; // the known window as a plain polynomial

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.low_ == b.low_ && a.upto_ == b.upto_ && a.coeffs_ == b.coeffs_;
    }

private:
    Int low_;
    Int upto_;
    std::vector<BigInt> coeffs_; // coeffs_[e - low_] for e in [low_, upto_]
};

// Expand numerator/denominator as a Laurent series through exponent upto,
// by long division from the lowest exponent up. The denominator's lowest
// nonzero coefficient must be +1 or -1 so every quotient stays integral;
// anything else is a DomainError, as is a zero denominator.
TruncatedSeries series_expand(const LaurentPoly& numerator, const LaurentPoly& denominator,
                              Int upto);

// "t^-2 + 2 + t^4" style rendering, lowest exponent first; "0" for zero.
std::string to_string(const LaurentPoly& p);
std::string to_string(const TruncatedSeries& s);

} // namespace orbsw

#endif

#include "orbsw/laurent.hpp"

#include <sstream>
#include <utility>

#include "orbsw/errors.hpp"

namespace orbsw {

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, Int exponent) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

BigInt LaurentPoly::coeff(Int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

Int LaurentPoly::lowest() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no lowest exponent");
    return terms_.begin()->first;
}

Int LaurentPoly::highest() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no highest exponent");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(Int exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly laurent_pow(const LaurentPoly& a, Int k) {
    if (k < 0) throw DomainError("laurent_pow: negative exponent");
    LaurentPoly r = LaurentPoly::monomial(1, 0);
    for (Int i = 0; i < k; ++i) r = laurent_mul(r, a);
    return r;
}

TruncatedSeries::TruncatedSeries(Int low, Int upto, std::vector<BigInt> coeffs)
    : low_(low), upto_(upto), coeffs_(std::move(coeffs)) {
    if (upto_ < low_ || coeffs_.size() != static_cast<std::size_t>(upto_ - low_ + 1))
        throw StructuralError("series window does not match coefficient count");
}

BigInt TruncatedSeries::coeff(Int exponent) const {
    if (exponent > upto_) throw DomainError("series coefficient beyond truncation bound");
    if (exponent < low_) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly TruncatedSeries::as_poly() const {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p.add_term(low_ + static_cast<Int>(i), coeffs_[i]);
    return p;
}

TruncatedSeries series_expand(const LaurentPoly& numerator, const LaurentPoly& denominator,
                              Int upto) {
    if (denominator.is_zero()) throw DomainError("series_expand: zero denominator");
    Int dlow = denominator.lowest();
    BigInt unit = denominator.coeff(dlow);
    if (unit != 1 && unit != -1)
        throw DomainError("series_expand: lowest denominator coefficient must be +1 or -1");

    if (numerator.is_zero())
        return TruncatedSeries(upto, upto, {BigInt(0)});

    Int low = numerator.lowest() - dlow;
    if (low > upto)
        return TruncatedSeries(upto, upto, {BigInt(0)});

    std::vector<BigInt> coeffs(static_cast<std::size_t>(upto - low + 1), BigInt(0));
    LaurentPoly rem = numerator;
    while (!rem.is_zero()) {
        Int e = rem.lowest() - dlow;
        if (e > upto) break;
        BigInt q = rem.coeff(rem.lowest()) * unit; // division by a unit
        coeffs[static_cast<std::size_t>(e - low)] = q;
        rem = laurent_sub(rem, laurent_mul(LaurentPoly::monomial(q, e), denominator));
    }
    return TruncatedSeries(low, upto, std::move(coeffs));
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e != 0) {
            if (mag != 1) os << '*';
            os << 't';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

std::string to_string(const TruncatedSeries& s) {
    std::string body = to_string(s.as_poly());
    std::ostringstream os;
    os << body << " + O(t^" << (s.upto() + 1) << ')';
    return os.str();
}

} // namespace orbsw

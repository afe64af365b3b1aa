#ifndef ORBSW_PICARD_HPP
#define ORBSW_PICARD_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbsw/numeric.hpp"

namespace orbsw {

// Closed oriented 2-orbifold: genus of the underlying surface plus the
// multiplicities alpha_i >= 1 of its cone points, in a fixed order.
// Multiplicity-1 entries are legal and kept; they act as marked points.
class OrbifoldSurface {
public:
    OrbifoldSurface(Int genus, std::vector<Int> cone_orders);

    Int genus() const { return genus_; }
    const std::vector<Int>& cones() const { return cones_; }
    std::size_t cone_count() const { return cones_.size(); }
    Int cone(std::size_t i) const;

    // lcm of all cone multiplicities (1 when there are none).
    Int cone_lcm() const;

    friend bool operator==(const OrbifoldSurface& a, const OrbifoldSurface& b) {
        return a.genus_ == b.genus_ && a.cones_ == b.cones_;
    }
    friend bool operator!=(const OrbifoldSurface& a, const OrbifoldSurface& b) {
        return !(a == b);
    }

private:
    Int genus_;
    std::vector<Int> cones_;
};

using SurfacePtr = std::shared_ptr<const OrbifoldSurface>;

SurfacePtr make_surface(Int genus, std::vector<Int> cone_orders);

// Orbifold complex line bundle in normalized Seifert form
// (d, (alpha_1, beta_1), ..., (alpha_n, beta_n)) with 0 <= beta_i < alpha_i.
// The constructor accepts arbitrary raw data and normalizes: every carry
// beta_i div alpha_i moves into the background degree d, so equal bundles
// have equal representations and the raw -> bundle map is a homomorphism.
class OrbLineBundle {
public:
    OrbLineBundle(SurfacePtr base, Int d_raw, std::vector<Int> beta_raw);

    static OrbLineBundle trivial(SurfacePtr base);

    const OrbifoldSurface& base() const { return *base_; }
    const SurfacePtr& base_ptr() const { return base_; }
    Int background_degree() const { return d_; }
    const std::vector<Int>& beta() const { return beta_; }
    Int beta(std::size_t i) const;

    bool is_trivial() const;

    // Equality requires equal bases; bundles over distinct surfaces are
    // never equal. operator< orders bundles over equal bases by
    // (background degree, beta tuple), the order enumerations print in.
    friend bool operator==(const OrbLineBundle& a, const OrbLineBundle& b);
    friend bool operator!=(const OrbLineBundle& a, const OrbLineBundle& b) {
        return !(a == b);
    }
    friend bool operator<(const OrbLineBundle& a, const OrbLineBundle& b);

private:
    SurfacePtr base_;
    Int d_;
    std::vector<Int> beta_;
};

// Group operations. Mixing bases throws StructuralError.
OrbLineBundle add(const OrbLineBundle& a, const OrbLineBundle& b);
OrbLineBundle neg(const OrbLineBundle& a);
OrbLineBundle scalar_mul(Int k, const OrbLineBundle& a);

inline OrbLineBundle operator+(const OrbLineBundle& a, const OrbLineBundle& b) { return add(a, b); }
inline OrbLineBundle operator-(const OrbLineBundle& a) { return neg(a); }
inline OrbLineBundle operator-(const OrbLineBundle& a, const OrbLineBundle& b) { return add(a, neg(b)); }
inline OrbLineBundle operator*(Int k, const OrbLineBundle& a) { return scalar_mul(k, a); }

// d + sum beta_i / alpha_i. A group homomorphism into the rationals.
Rational degree(const OrbLineBundle& a);

Int background_degree(const OrbLineBundle& a);

// Least n >= 1 with n*a trivial, or nullopt when degree(a) != 0.
// The order always divides lcm(alpha_i).
std::optional<Int> torsion_order(const OrbLineBundle& a);

// Replace cone i of multiplicity alpha_i by alpha_i / divisor (a marked
// point when the quotient is 1) and the local invariant beta_i by
// floor(beta_i / divisor). divisor must divide alpha_i. The result lives
// over the modified surface.
OrbLineBundle desingularize_point(const OrbLineBundle& a, std::size_t i, Int divisor);

// Integral first Chern class of an associated determinant bundle,
// written over the basis {F, F_1, ..., F_n}.
struct ChernClass {
    Int f_coeff = 0;
    std::vector<Int> fiber_coeffs;

    friend bool operator==(const ChernClass& a, const ChernClass& b) {
        return a.f_coeff == b.f_coeff && a.fiber_coeffs == b.fiber_coeffs;
    }
};

// "(d,(alpha_1,beta_1),...)" exactly as the tables print it.
std::string to_string(const OrbLineBundle& a);
// "c*F + c_1*F1 + ..." with zero fiber terms omitted; "0" when everything vanishes.
std::string to_string(const ChernClass& c);

} // namespace orbsw

#endif

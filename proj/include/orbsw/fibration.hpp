#ifndef ORBSW_FIBRATION_HPP
#define ORBSW_FIBRATION_HPP

#include <cstddef>
#include <vector>

#include "orbsw/picard.hpp"

namespace orbsw {

// A fixed-point-free circle action on a closed oriented 3-manifold,
// presented by its base orbifold and normalized Euler bundle
// E = (e, (alpha_1, e_1), ..., (alpha_n, e_n)).
class SeifertFibration {
public:
    SeifertFibration(SurfacePtr base, OrbLineBundle euler);

    const OrbifoldSurface& base() const { return *base_; }
    const SurfacePtr& base_ptr() const { return base_; }
    const OrbLineBundle& euler() const { return euler_; }

    // gcd(alpha_i, e_i), with gcd(alpha, 0) = alpha. The fiber over cone
    // point i is a singular circle exactly when this exceeds 1.
    Int singular_multiplicity(std::size_t i) const;

private:
    SurfacePtr base_;
    OrbLineBundle euler_;
};

// One member of a class enumeration: D' = D + k*E together with its
// base-case contribution sw_base(g, |D'|).
struct ClassMember {
    Int k;
    OrbLineBundle bundle;
    BigInt sw;
};

// Whether a and b differ by an integer multiple of the Euler bundle.
bool same_class(const SeifertFibration& f, const OrbLineBundle& a, const OrbLineBundle& b);

// All D' = D + k*E whose base-case invariant can be nonzero: background
// degree in [0, 2g-2] for g >= 1, or >= 0 for g = 0. Sorted by k. For a
// torsion Euler bundle, k ranges over one full period [0, order); a
// genus-0 base with non-torsion E has a divergent sum and throws
// DomainError.
std::vector<ClassMember> class_members_in_window(const SeifertFibration& f,
                                                 const OrbLineBundle& d);

// Sum of sw_base over the window members.
BigInt sw_invariant(const SeifertFibration& f, const OrbLineBundle& d);

// c1 of the determinant bundle attached to D over the base of D:
// (2d - 2g + 2) F + sum (2 beta_i + 1 - alpha_i) F_i. Defined by the
// bundle and its base alone; the fibration overloads first check that
// the bundle lives over the fibration's base.
ChernClass det_c1(const OrbLineBundle& d);
ChernClass det_c1(const SeifertFibration& f, const OrbLineBundle& d);

// Pairing of that class with the fundamental cycle:
// (2d - 2g + 2) + sum (2 beta_i + 1 - alpha_i) / alpha_i
//   = 2 deg(D) - (2g - 2 + sum (1 - 1/alpha_i)).
Rational real_c1_degree(const OrbLineBundle& d);
Rational real_c1_degree(const SeifertFibration& f, const OrbLineBundle& d);

// Removing the singular circle over cone point i, legal when
// a_i = singular_multiplicity(i) > 1. The base cone drops to
// alpha_i / a_i, the Euler component to e_i / a_i, and bundles are
// carried over by transport(). The SW invariant is preserved.
struct PhiReduction {
    SeifertFibration reduced;
    std::size_t index;
    Int divisor;

    OrbLineBundle transport(const OrbLineBundle& d) const;
};

PhiReduction phi_reduce(const SeifertFibration& f, std::size_t i);

} // namespace orbsw

#endif

#ifndef ORBSW_ELLIPTIC_HPP
#define ORBSW_ELLIPTIC_HPP

#include <vector>

#include "orbsw/picard.hpp"

namespace orbsw {

// One logarithmic transform of multiplicity m, twisted by the pair
// (a, b) of integers.
struct LogTransform {
    Int m;
    Int a;
    Int b;
};

// The two distinguished bundles generating the subgroup that acts on
// determinant classes.
struct GeneratorPair {
    OrbLineBundle e1;
    OrbLineBundle e2;
};

// Integer 2x2 matrix acting on a generator pair by rows.
struct Mat2 {
    Int a, b, c, d;
    Int det() const { return a * d - b * c; }
};

// Relatively minimal elliptic surface without multiple fibers, fibered
// over a genus-g curve, modified by log transforms. The base orbifold
// has one cone of multiplicity m_i per transform (m_i = 1 entries stay
// as marked points), and writing a_i = q_i m_i + u_i, b_i = r_i m_i + v_i
// with 0 <= u_i, v_i < m_i the generators are
//   E1 = (sum q_i, (m_1, u_1), ...),  E2 = (sum r_i, (m_1, v_1), ...).
class EllipticSurface {
public:
    EllipticSurface(Int genus, std::vector<LogTransform> transforms);

    Int genus() const { return genus_; }
    const std::vector<LogTransform>& transforms() const { return transforms_; }
    const SurfacePtr& surface() const { return surface_; }
    const OrbLineBundle& e1() const { return gens_.e1; }
    const OrbLineBundle& e2() const { return gens_.e2; }
    const GeneratorPair& generators() const { return gens_; }

private:
    Int genus_;
    std::vector<LogTransform> transforms_;
    SurfacePtr surface_;
    GeneratorPair gens_;
};

// The surface admits a Kahler metric iff both generator degrees vanish,
// i.e. sum a_i/m_i = sum b_i/m_i = 0.
bool is_kahler(const EllipticSurface& es);

// 2g+1 in the Kahler case, 2g otherwise.
Int b2_plus(const EllipticSurface& es);

// Replace the generators by (a*E1 + b*E2, c*E1 + d*E2); the matrix must
// have determinant 1 so the spanned subgroup is unchanged.
GeneratorPair change_basis(const GeneratorPair& gens, const Mat2& m);

struct OrbitMember {
    OrbLineBundle bundle;
    BigInt sw;
};

// All D' = D + x*E1 + y*E2 whose base-case invariant can be nonzero
// (background in [0, 2g-2] for g >= 1, >= 0 for g = 0), deduplicated and
// sorted by (background degree, beta tuple). Genus 0 demands both
// generators torsion; otherwise the sum diverges and this throws
// DomainError. The result depends only on the subgroup the generators
// span, not on the chosen basis.
std::vector<OrbitMember> orbit_members_in_window(Int genus, const GeneratorPair& gens,
                                                 const OrbLineBundle& d);
std::vector<OrbitMember> orbit_members_in_window(const EllipticSurface& es,
                                                 const OrbLineBundle& d);

BigInt sw_invariant(const EllipticSurface& es, const OrbLineBundle& d);

ChernClass det_c1(const EllipticSurface& es, const OrbLineBundle& d);

} // namespace orbsw

#endif

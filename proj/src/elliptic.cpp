#include "orbsw/elliptic.hpp"

#include <set>
#include <utility>

#include "orbsw/basecase.hpp"
#include "orbsw/errors.hpp"
#include "orbsw/fibration.hpp"

namespace orbsw {

namespace {

GeneratorPair build_bundles(const SurfacePtr& surface,
                            const std::vector<LogTransform>& transforms) {
    std::vector<Int> a, b;
    a.reserve(transforms.size());
    b.reserve(transforms.size());
    for (const LogTransform& t : transforms) {
        a.push_back(t.a);
        b.push_back(t.b);
    }
    // Normalization performs the split a_i = q_i m_i + u_i itself.
    return {OrbLineBundle(surface, 0, std::move(a)), OrbLineBundle(surface, 0, std::move(b))};
}

SurfacePtr surface_from(Int genus, const std::vector<LogTransform>& transforms) {
    std::vector<Int> cones;
    cones.reserve(transforms.size());
    for (const LogTransform& t : transforms) {
        if (t.m < 1) throw StructuralError("log transform multiplicity must be >= 1");
        cones.push_back(t.m);
    }
    return make_surface(genus, std::move(cones));
}

void require_compatible(const GeneratorPair& gens, const OrbLineBundle& d, const char* op) {
    if (gens.e1.base() != gens.e2.base() || gens.e1.base() != d.base())
        throw StructuralError(std::string(op) + ": bundles live over different surfaces");
}

bool in_window(Int genus, Int d) {
    if (genus == 0) return d >= 0;
    return d >= 0 && d <= 2 * genus - 2;
}

} // namespace

EllipticSurface::EllipticSurface(Int genus, std::vector<LogTransform> transforms)
    : genus_(genus),
      transforms_(std::move(transforms)),
      surface_(surface_from(genus_, transforms_)),
      gens_(build_bundles(surface_, transforms_)) {}

bool is_kahler(const EllipticSurface& es) {
    return degree(es.e1()) == 0 && degree(es.e2()) == 0;
}

Int b2_plus(const EllipticSurface& es) {
    return is_kahler(es) ? 2 * es.genus() + 1 : 2 * es.genus();
}

GeneratorPair change_basis(const GeneratorPair& gens, const Mat2& m) {
    if (gens.e1.base() != gens.e2.base())
        throw StructuralError("change_basis: generators live over different surfaces");
    if (m.det() != 1) throw DomainError("change_basis: matrix determinant must be 1");
    return {scalar_mul(m.a, gens.e1) + scalar_mul(m.b, gens.e2),
            scalar_mul(m.c, gens.e1) + scalar_mul(m.d, gens.e2)};
}

std::vector<OrbitMember> orbit_members_in_window(Int genus, const GeneratorPair& gens,
                                                 const OrbLineBundle& d) {
    require_compatible(gens, d, "orbit_members_in_window");
    const Rational de1 = degree(gens.e1);
    const Rational de2 = degree(gens.e2);
    const Int ncones = static_cast<Int>(d.base().cone_count());

    std::set<OrbLineBundle> found;
    auto consider = [&](const OrbLineBundle& m) {
        if (in_window(genus, m.background_degree())) found.insert(m);
    };

    if (de1 == 0 && de2 == 0) {
        // Both generators torsion: the orbit itself is finite and one
        // period in each generator covers it.
        Int n1 = *torsion_order(gens.e1);
        Int n2 = *torsion_order(gens.e2);
        OrbLineBundle row = d;
        for (Int x = 0; x < n1; ++x) {
            OrbLineBundle m = row;
            for (Int y = 0; y < n2; ++y) {
                consider(m);
                m = m + gens.e2;
            }
            row = row + gens.e1;
        }
    } else {
        if (genus == 0)
            throw DomainError("divergent genus-0 sum: a generator is not torsion");

        // Split the span into a torsion direction and a direction of
        // minimal positive degree. Writing deg(Ei) = n_i/den over a
        // common denominator, the kernel of (x, y) -> x n_1 + y n_2 is
        // generated by the primitive vector (p, q), and any (r, s)
        // completing it to a unimodular basis maps onto the degree-image
        // generator delta = gcd(n_1, n_2)/den.
        BigInt den = BigInt(lcm_positive(to_int_checked(de1.get_den(), "degree denominator"),
                                         to_int_checked(de2.get_den(), "degree denominator")));
        BigInt n1 = de1.get_num() * (den / de1.get_den());
        BigInt n2 = de2.get_num() * (den / de2.get_den());
        BigInt g0 = gcd(n1, n2);
        Int p = to_int_checked(n2 / g0, "kernel vector");
        Int q = to_int_checked(-n1 / g0, "kernel vector");
        ExtGcd eg = ext_gcd(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
        Int r = to_int_checked(-eg.y, "basis vector");
        Int s = to_int_checked(eg.x, "basis vector");

        OrbLineBundle torsion_gen = scalar_mul(p, gens.e1) + scalar_mul(q, gens.e2);
        OrbLineBundle step = scalar_mul(r, gens.e1) + scalar_mul(s, gens.e2);
        Rational delta = degree(step);
        if (delta < 0) {
            step = -step;
            delta = -delta;
        }
        Int n_k = *torsion_order(torsion_gen);

        Rational lo = (rational_of(0) - degree(d)) / delta;
        Rational hi = (rational_of(2 * genus - 2 + ncones) - degree(d)) / delta;
        Int v_lo = to_int_checked(rational_ceil(lo), "orbit window");
        Int v_hi = to_int_checked(rational_floor(hi), "orbit window");
        for (Int v = v_lo; v <= v_hi; ++v) {
            OrbLineBundle m = d + scalar_mul(v, step);
            for (Int u = 0; u < n_k; ++u) {
                consider(m);
                m = m + torsion_gen;
            }
        }
    }

    std::vector<OrbitMember> out;
    out.reserve(found.size());
    for (const OrbLineBundle& m : found)
        out.push_back({m, sw_base(genus, m.background_degree())});
    return out;
}

std::vector<OrbitMember> orbit_members_in_window(const EllipticSurface& es,
                                                 const OrbLineBundle& d) {
    return orbit_members_in_window(es.genus(), es.generators(), d);
}

BigInt sw_invariant(const EllipticSurface& es, const OrbLineBundle& d) {
    BigInt total = 0;
    for (const OrbitMember& m : orbit_members_in_window(es, d)) total += m.sw;
    return total;
}

ChernClass det_c1(const EllipticSurface& es, const OrbLineBundle& d) {
    if (d.base() != *es.surface())
        throw StructuralError("det_c1: bundle does not live over the elliptic base");
    return det_c1(d);
}

} // namespace orbsw

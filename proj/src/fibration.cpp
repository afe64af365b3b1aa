#include "orbsw/fibration.hpp"

#include <utility>

#include "orbsw/basecase.hpp"
#include "orbsw/errors.hpp"

namespace orbsw {

namespace {

void require_over_base(const OrbifoldSurface& base, const OrbLineBundle& d, const char* op) {
    if (d.base() != base)
        throw StructuralError(std::string(op) + ": bundle does not live over the fibration base");
}

bool in_window(Int genus, Int d) {
    if (genus == 0) return d >= 0;
    return d >= 0 && d <= 2 * genus - 2;
}

} // namespace

SeifertFibration::SeifertFibration(SurfacePtr base, OrbLineBundle euler)
    : base_(std::move(base)), euler_(std::move(euler)) {
    if (!base_) throw StructuralError("fibration needs a base surface");
    require_over_base(*base_, euler_, "fibration");
}

Int SeifertFibration::singular_multiplicity(std::size_t i) const {
    return gcd_nonneg(base_->cone(i), euler_.beta(i));
}

bool same_class(const SeifertFibration& f, const OrbLineBundle& a, const OrbLineBundle& b) {
    require_over_base(f.base(), a, "same_class");
    require_over_base(f.base(), b, "same_class");
    OrbLineBundle diff = a - b;
    Rational de = degree(f.euler());
    if (de == 0) {
        Int order = *torsion_order(f.euler());
        for (Int k = 0; k < order; ++k)
            if (scalar_mul(k, f.euler()) == diff) return true;
        return false;
    }
    Rational ratio = degree(diff) / de;
    if (!is_integer(ratio)) return false;
    Int k = to_int_checked(ratio.get_num(), "same_class offset");
    return scalar_mul(k, f.euler()) == diff;
}

std::vector<ClassMember> class_members_in_window(const SeifertFibration& f,
                                                 const OrbLineBundle& d) {
    require_over_base(f.base(), d, "class_members_in_window");
    const Int genus = f.base().genus();
    const OrbLineBundle& e = f.euler();
    Rational de = degree(e);

    std::vector<ClassMember> out;
    auto consider = [&](Int k, const OrbLineBundle& m) {
        if (!in_window(genus, m.background_degree())) return;
        out.push_back({k, m, sw_base(genus, m.background_degree())});
    };

    if (de == 0) {
        // Finite class: one member per k in a full torsion period.
        Int order = *torsion_order(e);
        OrbLineBundle m = d;
        for (Int k = 0; k < order; ++k) {
            consider(k, m);
            m = m + e;
        }
        return out;
    }

    if (genus == 0)
        throw DomainError("divergent genus-0 sum: Euler bundle is not torsion");

    // Solve deg(D) + k*deg(E) in [0, 2g-2+n] exactly; the fractional part
    // of any degree is < n, so every background in [0, 2g-2] is covered.
    Rational lo_bound = (rational_of(0) - degree(d)) / de;
    Rational hi_bound = (rational_of(2 * genus - 2 + static_cast<Int>(f.base().cone_count())) -
                         degree(d)) / de;
    if (de < 0) std::swap(lo_bound, hi_bound);
    Int k_lo = to_int_checked(rational_ceil(lo_bound), "class window");
    Int k_hi = to_int_checked(rational_floor(hi_bound), "class window");
    for (Int k = k_lo; k <= k_hi; ++k)
        consider(k, d + scalar_mul(k, e));
    return out;
}

BigInt sw_invariant(const SeifertFibration& f, const OrbLineBundle& d) {
    BigInt total = 0;
    for (const ClassMember& m : class_members_in_window(f, d)) total += m.sw;
    return total;
}

ChernClass det_c1(const OrbLineBundle& d) {
    const OrbifoldSurface& s = d.base();
    ChernClass c;
    c.f_coeff = 2 * d.background_degree() - 2 * s.genus() + 2;
    c.fiber_coeffs.reserve(s.cone_count());
    for (std::size_t i = 0; i < s.cone_count(); ++i)
        c.fiber_coeffs.push_back(2 * d.beta(i) + 1 - s.cone(i));
    return c;
}

ChernClass det_c1(const SeifertFibration& f, const OrbLineBundle& d) {
    require_over_base(f.base(), d, "det_c1");
    return det_c1(d);
}

Rational real_c1_degree(const OrbLineBundle& d) {
    ChernClass c = det_c1(d);
    Rational sum = rational_of(c.f_coeff);
    const auto& cones = d.base().cones();
    for (std::size_t i = 0; i < cones.size(); ++i)
        sum += make_rational(BigInt(static_cast<long>(c.fiber_coeffs[i])),
                             BigInt(static_cast<long>(cones[i])));
    return sum;
}

Rational real_c1_degree(const SeifertFibration& f, const OrbLineBundle& d) {
    require_over_base(f.base(), d, "real_c1_degree");
    return real_c1_degree(d);
}

OrbLineBundle PhiReduction::transport(const OrbLineBundle& d) const {
    return desingularize_point(d, index, divisor);
}

PhiReduction phi_reduce(const SeifertFibration& f, std::size_t i) {
    Int a = f.singular_multiplicity(i);
    if (a <= 1) throw DomainError("phi_reduce: fiber is not singular");
    OrbLineBundle euler0 = desingularize_point(f.euler(), i, a);
    SurfacePtr base0 = euler0.base_ptr();
    return PhiReduction{SeifertFibration(base0, euler0), i, a};
}

} // namespace orbsw

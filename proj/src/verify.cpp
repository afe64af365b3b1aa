#include "orbsw/verify.hpp"

#include <functional>
#include <utility>

#include "orbsw/basecase.hpp"
#include "orbsw/fibration.hpp"
#include "orbsw/laurent.hpp"
#include "orbsw/picard.hpp"

// Golden values for three worked S^1-fibered examples: a fibration over
// a genus-5 orbifold with cone points (3,5,7) and a non-torsion Euler
// bundle, and two fibrations over genus-0 orbifolds whose Euler bundles
// are torsion of orders 3 and 6. Every number asserted here was computed
// independently (exact rational sums and the direct k-iteration) before
// being frozen.

namespace orbsw {

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

int VerifyReport::passed_count() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.passed) ++n;
    return n;
}

namespace {

OrbLineBundle bundle(const SurfacePtr& s, Int d, std::vector<Int> beta) {
    return OrbLineBundle(s, d, std::move(beta));
}

bool same_members(const std::vector<ClassMember>& got,
                  const std::vector<OrbLineBundle>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (!(got[i].bundle == want[i])) return false;
    return true;
}

LaurentPoly poly(std::vector<std::pair<Int, Int>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, BigInt(static_cast<long>(c)));
    return p;
}

} // namespace

VerifyReport run_verify_suite() {
    VerifyReport report;
    auto check = [&](std::string name, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (...) {
            ok = false;
        }
        report.checks.push_back({std::move(name), ok});
    };

    // Fibration over a genus-5 orbifold, non-torsion Euler bundle.
    SurfacePtr s357 = make_surface(5, {3, 5, 7});
    SeifertFibration f357(s357, bundle(s357, 1, {2, 3, 5}));
    OrbLineBundle d357 = bundle(s357, 2, {1, 1, 1});

    check("genus-5 fibration: Euler degree 313/105", [&] {
        return degree(f357.euler()) == make_rational(313, 105);
    });
    check("genus-5 fibration: doubled Euler bundle", [&] {
        return scalar_mul(2, f357.euler()) == bundle(s357, 5, {1, 1, 3});
    });
    check("genus-5 fibration: window members", [&] {
        return same_members(class_members_in_window(f357, d357),
                            {bundle(s357, 2, {1, 1, 1}), bundle(s357, 4, {0, 4, 6}),
                             bundle(s357, 7, {2, 2, 4})});
    });
    check("genus-5 fibration: SW = 90", [&] {
        return sw_invariant(f357, d357) == 90;
    });
    check("genus-5 fibration: det c1 = -4F - 2F2 - 4F3", [&] {
        ChernClass c = det_c1(f357, d357);
        return c.f_coeff == -4 && c.fiber_coeffs == std::vector<Int>{0, -2, -4} &&
               to_string(c) == "-4F - 2F2 - 4F3";
    });
    check("genus-5 fibration: real c1 degree -174/35", [&] {
        return real_c1_degree(f357, d357) == make_rational(-174, 35);
    });

    // Fibration over a genus-0 orbifold with cones (3,3); the Euler
    // bundle is torsion of order 3 and SW(D_{d,i}) = 3d + 1 + i.
    SurfacePtr s33 = make_surface(0, {3, 3});
    SeifertFibration f33(s33, bundle(s33, -1, {1, 2}));
    auto d33 = [&](Int d, Int i) {
        // i encodes the three degree-(d + i/3 + ...) classes used below.
        static const std::vector<std::vector<Int>> beta = {{0, 0}, {0, 1}, {1, 1}};
        return bundle(s33, d, beta[static_cast<std::size_t>(i)]);
    };

    check("order-3 torsion fibration: torsion order", [&] {
        return torsion_order(f33.euler()) == std::optional<Int>(3);
    });
    check("order-3 torsion fibration: class member tables", [&] {
        for (Int d = 0; d <= 5; ++d) {
            std::vector<std::vector<OrbLineBundle>> full = {
                {bundle(s33, d, {0, 0}), bundle(s33, d - 1, {1, 2}), bundle(s33, d - 1, {2, 1})},
                {bundle(s33, d, {0, 1}), bundle(s33, d, {1, 0}), bundle(s33, d - 1, {2, 2})},
                {bundle(s33, d, {1, 1}), bundle(s33, d, {2, 0}), bundle(s33, d, {0, 2})},
            };
            for (Int i = 0; i <= 2; ++i) {
                std::vector<OrbLineBundle> in_window;
                for (const OrbLineBundle& m : full[static_cast<std::size_t>(i)]) {
                    if (!same_class(f33, m, d33(d, i))) return false;
                    if (m.background_degree() >= 0) in_window.push_back(m);
                }
                if (!same_members(class_members_in_window(f33, d33(d, i)), in_window))
                    return false;
            }
        }
        return true;
    });
    check("order-3 torsion fibration: SW = 3d+1+i", [&] {
        for (Int d = 0; d <= 5; ++d)
            for (Int i = 0; i <= 2; ++i)
                if (sw_invariant(f33, d33(d, i)) != 3 * d + 1 + i) return false;
        return true;
    });
    check("order-3 torsion fibration: SW vanishes for d < 0", [&] {
        for (Int d = -3; d <= -1; ++d)
            for (Int i = 0; i <= 2; ++i)
                if (sw_invariant(f33, d33(d, i)) != 0) return false;
        return true;
    });
    check("order-3 torsion fibration: SW matches series coefficients", [&] {
        // 1 / (t^-1 - t)^2 through t^12; SW(D_{d,i}) sits at exponent 6d+2+2i.
        LaurentPoly den = laurent_pow(poly({{-1, 1}, {1, -1}}), 2);
        TruncatedSeries s = series_expand(poly({{0, 1}}), den, 12);
        for (Int m = 1; m <= 6; ++m)
            if (s.coeff(2 * m) != m || s.coeff(2 * m - 1) != 0) return false;
        for (Int d = 0; d <= 1; ++d)
            for (Int i = 0; i <= 2; ++i)
                if (s.coeff(6 * d + 2 + 2 * i) != sw_invariant(f33, d33(d, i))) return false;
        return true;
    });

    // Fibration over a genus-0 orbifold with cones (2,3,6); the Euler
    // bundle is torsion of order 6.
    SurfacePtr s236 = make_surface(0, {2, 3, 6});
    SeifertFibration f236(s236, bundle(s236, -2, {1, 2, 5}));
    static const std::vector<std::vector<Int>> beta236 = {
        {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}};
    auto d236 = [&](Int d, Int i) {
        return bundle(s236, d, beta236[static_cast<std::size_t>(i)]);
    };

    check("order-6 torsion fibration: torsion order", [&] {
        return torsion_order(f236.euler()) == std::optional<Int>(6);
    });
    check("order-6 torsion fibration: multiples table", [&] {
        return scalar_mul(2, f236.euler()) == bundle(s236, -1, {0, 1, 4}) &&
               scalar_mul(3, f236.euler()) == bundle(s236, -1, {1, 0, 3}) &&
               scalar_mul(4, f236.euler()) == bundle(s236, -1, {0, 2, 2}) &&
               scalar_mul(5, f236.euler()) == bundle(s236, -1, {1, 1, 1}) &&
               scalar_mul(6, f236.euler()).is_trivial();
    });
    check("order-6 torsion fibration: SW table", [&] {
        for (Int d = -2; d <= 4; ++d) {
            for (Int i = 0; i <= 5; ++i) {
                BigInt want = d < 0 ? BigInt(0)
                              : (d == 0 && i == 0) ? BigInt(1)
                                                   : BigInt(static_cast<long>(6 * d + i));
                if (sw_invariant(f236, d236(d, i)) != want) return false;
            }
        }
        return true;
    });
    check("order-6 torsion fibration: series coefficients", [&] {
        // (t^4 - t^2 + 1) / (1 - t^2)^2 through t^10.
        LaurentPoly den = laurent_pow(poly({{0, 1}, {2, -1}}), 2);
        TruncatedSeries s = series_expand(poly({{4, 1}, {2, -1}, {0, 1}}), den, 10);
        static const Int want[6] = {1, 1, 2, 3, 4, 5};
        for (Int m = 0; m <= 5; ++m)
            if (s.coeff(2 * m) != want[m] || (m > 0 && s.coeff(2 * m - 1) != 0)) return false;
        return true;
    });

    return report;
}

} // namespace orbsw

// Deterministic random generators and independent oracles shared by the
// test binaries. Everything here stays away from the library's internal
// shortcuts: binomials come from Pascal's triangle, torsion orders from
// direct iteration, orbits from exhaustive scans.

#ifndef ORBSW_TESTS_SUPPORT_HPP
#define ORBSW_TESTS_SUPPORT_HPP

#include <numeric>
#include <random>
#include <vector>

#include "orbsw/elliptic.hpp"
#include "orbsw/numeric.hpp"
#include "orbsw/picard.hpp"

namespace testsupport {

using orbsw::BigInt;
using orbsw::Int;
using orbsw::Rational;
using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline orbsw::SurfacePtr random_surface(Rng& rng, Int genus_min = 0, Int genus_max = 3,
                                        Int max_cones = 4, Int max_alpha = 9) {
    Int genus = rand_int(rng, genus_min, genus_max);
    Int n = rand_int(rng, 0, max_cones);
    std::vector<Int> cones;
    for (Int i = 0; i < n; ++i) cones.push_back(rand_int(rng, 1, max_alpha));
    return orbsw::make_surface(genus, std::move(cones));
}

inline orbsw::OrbLineBundle random_bundle(Rng& rng, const orbsw::SurfacePtr& s, Int dmax = 6) {
    std::vector<Int> beta;
    for (Int a : s->cones()) beta.push_back(rand_int(rng, -3 * a, 3 * a));
    return orbsw::OrbLineBundle(s, rand_int(rng, -dmax, dmax), std::move(beta));
}

// A degree-zero bundle with unconstrained local data: the last cone has
// multiplicity lcm(others), large enough to cancel any fractional part.
struct TorsionInstance {
    orbsw::SurfacePtr surface;
    orbsw::OrbLineBundle bundle;
};

inline TorsionInstance random_torsion_bundle(Rng& rng, Int genus, Int max_cones = 3,
                                             Int max_alpha = 6) {
    Int n = rand_int(rng, 0, max_cones);
    std::vector<Int> cones;
    Int big = 1;
    for (Int i = 0; i < n; ++i) {
        Int a = rand_int(rng, 1, max_alpha);
        cones.push_back(a);
        big = std::lcm(big, a);
    }
    cones.push_back(big);
    auto surface = orbsw::make_surface(genus, cones);

    std::vector<Int> beta;
    Rational acc = 0;
    for (Int i = 0; i < n; ++i) {
        Int b = rand_int(rng, 0, cones[static_cast<std::size_t>(i)] - 1);
        beta.push_back(b);
        acc += orbsw::make_rational(b, cones[static_cast<std::size_t>(i)]);
    }
    Rational frac = acc - Rational(orbsw::rational_floor(acc));
    Int q = orbsw::to_int_checked(frac.get_den(), "torsion generator");
    Int p = orbsw::to_int_checked(frac.get_num(), "torsion generator");
    beta.push_back(((big / q) * ((q - p) % q)) % big);

    Rational total = acc + orbsw::make_rational(beta.back(), big);
    Int d = -orbsw::to_int_checked(total.get_num(), "torsion generator"); // total is integral
    return {surface, orbsw::OrbLineBundle(surface, d, std::move(beta))};
}

// Log-transform data whose twisting sums both cancel, so that both
// generators are torsion (the Kahler case). The last transform has
// multiplicity lcm(m_i) and absorbs the running sums.
inline orbsw::EllipticSurface random_kahler_elliptic(Rng& rng, Int genus, Int max_transforms = 3,
                                                     Int max_m = 5) {
    Int n = rand_int(rng, 0, max_transforms);
    std::vector<orbsw::LogTransform> ts;
    Int big = 1;
    for (Int i = 0; i < n; ++i) {
        Int m = rand_int(rng, 1, max_m);
        ts.push_back({m, rand_int(rng, -6, 6), rand_int(rng, -6, 6)});
        big = std::lcm(big, m);
    }
    Int a_sum = 0, b_sum = 0;
    for (const auto& t : ts) {
        a_sum += t.a * (big / t.m);
        b_sum += t.b * (big / t.m);
    }
    ts.push_back({big, -a_sum, -b_sum});
    return orbsw::EllipticSurface(genus, std::move(ts));
}

inline orbsw::EllipticSurface random_elliptic(Rng& rng, Int genus, Int max_transforms = 3,
                                              Int max_m = 5) {
    Int n = rand_int(rng, 0, max_transforms);
    std::vector<orbsw::LogTransform> ts;
    for (Int i = 0; i < n; ++i)
        ts.push_back({rand_int(rng, 1, max_m), rand_int(rng, -6, 6), rand_int(rng, -6, 6)});
    return orbsw::EllipticSurface(genus, std::move(ts));
}

inline orbsw::Mat2 random_sl2(Rng& rng, Int factors = 5) {
    // Product of elementary shears; determinant stays 1 and entries stay small.
    orbsw::Mat2 m{1, 0, 0, 1};
    for (Int i = 0; i < factors; ++i) {
        Int t = rand_int(rng, 0, 1) ? 1 : -1;
        if (rand_int(rng, 0, 1)) {
            // [[1, t], [0, 1]] * m
            m = {m.a + t * m.c, m.b + t * m.d, m.c, m.d};
        } else {
            // [[1, 0], [t, 1]] * m
            m = {m.a, m.b, m.c + t * m.a, m.d + t * m.b};
        }
    }
    return m;
}

// ---- independent oracles -------------------------------------------------

inline BigInt binom_pascal(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> row{1};
    for (Int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<std::size_t>(i) + 1, BigInt(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

// Direct iteration: the least n >= 1 with n*a trivial, capped by bound.
inline std::optional<Int> torsion_order_by_iteration(const orbsw::OrbLineBundle& a, Int bound) {
    orbsw::OrbLineBundle acc = a;
    for (Int n = 1; n <= bound; ++n) {
        if (acc.is_trivial()) return n;
        acc = acc + a;
    }
    return std::nullopt;
}

} // namespace testsupport

#endif

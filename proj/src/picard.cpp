#include "orbsw/picard.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "orbsw/errors.hpp"

namespace orbsw {

OrbifoldSurface::OrbifoldSurface(Int genus, std::vector<Int> cone_orders)
    : genus_(genus), cones_(std::move(cone_orders)) {
    if (genus_ < 0) throw StructuralError("surface genus must be >= 0");
    for (Int a : cones_)
        if (a < 1) throw StructuralError("cone multiplicity must be >= 1");
}

Int OrbifoldSurface::cone(std::size_t i) const {
    if (i >= cones_.size()) throw StructuralError("cone index out of range");
    return cones_[i];
}

Int OrbifoldSurface::cone_lcm() const {
    Int l = 1;
    for (Int a : cones_) l = lcm_positive(l, a);
    return l;
}

SurfacePtr make_surface(Int genus, std::vector<Int> cone_orders) {
    return std::make_shared<const OrbifoldSurface>(genus, std::move(cone_orders));
}

namespace {

void require_same_base(const OrbLineBundle& a, const OrbLineBundle& b, const char* op) {
    if (a.base() != b.base())
        throw StructuralError(std::string(op) + ": bundles live over different surfaces");
}

} // namespace

OrbLineBundle::OrbLineBundle(SurfacePtr base, Int d_raw, std::vector<Int> beta_raw)
    : base_(std::move(base)), d_(d_raw), beta_(std::move(beta_raw)) {
    if (!base_) throw StructuralError("bundle needs a surface");
    const auto& cones = base_->cones();
    if (beta_.size() != cones.size())
        throw StructuralError("local invariant count does not match cone count");
    for (std::size_t i = 0; i < beta_.size(); ++i) {
        d_ += floor_div(beta_[i], cones[i]);
        beta_[i] = mod_floor(beta_[i], cones[i]);
    }
}

OrbLineBundle OrbLineBundle::trivial(SurfacePtr base) {
    if (!base) throw StructuralError("bundle needs a surface");
    return OrbLineBundle(base, 0, std::vector<Int>(base->cone_count(), 0));
}

Int OrbLineBundle::beta(std::size_t i) const {
    if (i >= beta_.size()) throw StructuralError("cone index out of range");
    return beta_[i];
}

bool OrbLineBundle::is_trivial() const {
    if (d_ != 0) return false;
    return std::all_of(beta_.begin(), beta_.end(), [](Int b) { return b == 0; });
}

bool operator==(const OrbLineBundle& a, const OrbLineBundle& b) {
    return *a.base_ == *b.base_ && a.d_ == b.d_ && a.beta_ == b.beta_;
}

bool operator<(const OrbLineBundle& a, const OrbLineBundle& b) {
    require_same_base(a, b, "compare");
    if (a.d_ != b.d_) return a.d_ < b.d_;
    return a.beta_ < b.beta_;
}

OrbLineBundle add(const OrbLineBundle& a, const OrbLineBundle& b) {
    require_same_base(a, b, "add");
    std::vector<Int> beta(a.beta());
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += b.beta(i);
    return OrbLineBundle(a.base_ptr(), a.background_degree() + b.background_degree(),
                         std::move(beta));
}

OrbLineBundle neg(const OrbLineBundle& a) {
    std::vector<Int> beta(a.beta());
    for (Int& b : beta) b = -b;
    return OrbLineBundle(a.base_ptr(), -a.background_degree(), std::move(beta));
}

OrbLineBundle scalar_mul(Int k, const OrbLineBundle& a) {
    // Normalization is a homomorphism on raw tuples, so scaling the raw
    // data equals the k-fold group sum.
    std::vector<Int> beta(a.beta());
    for (Int& b : beta) b *= k;
    return OrbLineBundle(a.base_ptr(), k * a.background_degree(), std::move(beta));
}

Rational degree(const OrbLineBundle& a) {
    Rational sum = rational_of(a.background_degree());
    const auto& cones = a.base().cones();
    for (std::size_t i = 0; i < cones.size(); ++i)
        sum += make_rational(BigInt(static_cast<long>(a.beta(i))),
                             BigInt(static_cast<long>(cones[i])));
    return sum;
}

Int background_degree(const OrbLineBundle& a) {
    return a.background_degree();
}

std::optional<Int> torsion_order(const OrbLineBundle& a) {
    if (degree(a) != 0) return std::nullopt;
    // n*a is trivial iff alpha_i | n*beta_i for every i; once that holds,
    // the background of n*a equals n*degree(a) = 0 on its own. Hence the
    // order is lcm_i(alpha_i / gcd(alpha_i, beta_i)).
    Int n = 1;
    const auto& cones = a.base().cones();
    for (std::size_t i = 0; i < cones.size(); ++i)
        n = lcm_positive(n, cones[i] / gcd_nonneg(cones[i], a.beta(i)));
    return n;
}

OrbLineBundle desingularize_point(const OrbLineBundle& a, std::size_t i, Int divisor) {
    const OrbifoldSurface& s = a.base();
    if (i >= s.cone_count()) throw StructuralError("desingularize: cone index out of range");
    if (divisor < 1) throw DomainError("desingularize: divisor must be >= 1");
    Int alpha = s.cone(i);
    if (alpha % divisor != 0) throw DomainError("desingularize: divisor does not divide cone multiplicity");

    std::vector<Int> cones(s.cones());
    cones[i] = alpha / divisor;
    std::vector<Int> beta(a.beta());
    beta[i] = floor_div(beta[i], divisor); // lands in [0, alpha/divisor) automatically
    return OrbLineBundle(make_surface(s.genus(), std::move(cones)), a.background_degree(),
                         std::move(beta));
}

std::string to_string(const OrbLineBundle& a) {
    std::ostringstream os;
    os << '(' << a.background_degree();
    const auto& cones = a.base().cones();
    for (std::size_t i = 0; i < cones.size(); ++i)
        os << ",(" << cones[i] << ',' << a.beta(i) << ')';
    os << ')';
    return os.str();
}

std::string to_string(const ChernClass& c) {
    std::ostringstream os;
    bool wrote = false;
    auto term = [&](Int v, const std::string& sym) {
        if (v == 0) return;
        if (wrote) {
            os << (v < 0 ? " - " : " + ");
            Int mag = v < 0 ? -v : v;
            if (mag != 1) os << mag;
        } else if (v == -1) {
            os << '-';
        } else if (v != 1) {
            os << v;
        }
        os << sym;
        wrote = true;
    };
    term(c.f_coeff, "F");
    for (std::size_t i = 0; i < c.fiber_coeffs.size(); ++i)
        term(c.fiber_coeffs[i], "F" + std::to_string(i + 1));
    if (!wrote) return "0";
    return os.str();
}

} // namespace orbsw

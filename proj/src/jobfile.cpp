#include "orbsw/jobfile.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "orbsw/basecase.hpp"
#include "orbsw/elliptic.hpp"
#include "orbsw/errors.hpp"
#include "orbsw/fibration.hpp"
#include "orbsw/laurent.hpp"
#include "orbsw/picard.hpp"
#include "orbsw/verify.hpp"

namespace orbsw {

using nlohmann::json;

namespace {

// ---- strict document parsing -------------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

void require_object(const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object");
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& path) {
    for (const auto& item : obj.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](const char* k) { return item.key() == k; });
        if (!known) fail(path + "/" + item.key(), "unknown field");
    }
}

const json& need(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path + "/" + key, "missing required field");
    return *it;
}

Int get_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer (floats are not accepted)");
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
        fail(path, "integer out of range");
    return v.get<Int>();
}

std::vector<Int> get_int_array(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of integers");
    std::vector<Int> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(get_int(v[i], path + "/" + std::to_string(i)));
    return out;
}

BundleSpec parse_bundle(const json& v, const std::string& path) {
    require_object(v, path);
    check_keys(v, {"d", "beta"}, path);
    BundleSpec b;
    b.d = get_int(need(v, "d", path), path + "/d");
    b.beta = get_int_array(need(v, "beta", path), path + "/beta");
    return b;
}

// Accepts either `bundle` (one object) or `bundles` (non-empty array).
std::vector<BundleSpec> parse_bundle_list(const json& root) {
    bool single = root.contains("bundle");
    bool many = root.contains("bundles");
    if (single == many)
        fail("/bundle", single ? "give either bundle or bundles, not both"
                               : "missing required field (or bundles)");
    if (single) return {parse_bundle(root["bundle"], "/bundle")};
    const json& arr = root["bundles"];
    if (!arr.is_array() || arr.empty()) fail("/bundles", "expected a non-empty array");
    std::vector<BundleSpec> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(parse_bundle(arr[i], "/bundles/" + std::to_string(i)));
    return out;
}

void check_beta_length(const BundleSpec& b, std::size_t cones, const std::string& path,
                       const char* cones_path) {
    if (b.beta.size() != cones)
        fail(path + "/beta", "length " + std::to_string(b.beta.size()) + " does not match " +
                                 cones_path + " length " + std::to_string(cones));
}

Int parse_genus(const json& v, const std::string& path) {
    Int g = get_int(v, path);
    if (g < 0) fail(path, "genus must be >= 0");
    return g;
}

std::vector<std::pair<Int, BigInt>> parse_pair_list(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of [exponent, coefficient] pairs");
    std::vector<std::pair<Int, BigInt>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const json& pair = v[i];
        std::string ppath = path + "/" + std::to_string(i);
        if (!pair.is_array() || pair.size() != 2)
            fail(ppath, "expected an [exponent, coefficient] pair");
        Int e = get_int(pair[0], ppath + "/0");
        Int c = get_int(pair[1], ppath + "/1");
        for (const auto& [seen, unused] : out)
            if (seen == e) fail(ppath, "duplicate exponent " + std::to_string(e));
        out.emplace_back(e, BigInt(static_cast<long>(c)));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void check_result_field(const json& root) {
    // Machine output carries its results under this key; re-reading such a
    // document as input is supported, so the field is known and skipped.
    if (root.contains("result") && !root["result"].is_object())
        fail("/result", "expected an object");
}

} // namespace

JobSpec parse_input(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    require_object(root, "/");
    std::string mode = [&] {
        const json& m = need(root, "mode", "");
        if (!m.is_string()) fail("/mode", "expected a string");
        return m.get<std::string>();
    }();

    JobSpec job;
    check_result_field(root);
    if (mode == "base") {
        job.mode = Mode::Base;
        check_keys(root, {"mode", "genus", "d_min", "d_max", "result"}, "");
        BaseJob b;
        b.genus = parse_genus(need(root, "genus", ""), "/genus");
        b.d_min = get_int(need(root, "d_min", ""), "/d_min");
        b.d_max = get_int(need(root, "d_max", ""), "/d_max");
        if (b.d_min > b.d_max) fail("/d_min", "d_min exceeds d_max");
        job.payload = b;
    } else if (mode == "seifert") {
        job.mode = Mode::Seifert;
        check_keys(root, {"mode", "surface", "euler", "bundle", "bundles", "result"}, "");
        SeifertJob s;
        const json& surf = need(root, "surface", "");
        require_object(surf, "/surface");
        check_keys(surf, {"genus", "cones"}, "/surface");
        s.genus = parse_genus(need(surf, "genus", "/surface"), "/surface/genus");
        s.cones = get_int_array(need(surf, "cones", "/surface"), "/surface/cones");
        for (std::size_t i = 0; i < s.cones.size(); ++i)
            if (s.cones[i] < 1) fail("/surface/cones/" + std::to_string(i), "cone multiplicity must be >= 1");
        s.euler = parse_bundle(need(root, "euler", ""), "/euler");
        check_beta_length(s.euler, s.cones.size(), "/euler", "/surface/cones");
        s.bundles = parse_bundle_list(root);
        for (std::size_t i = 0; i < s.bundles.size(); ++i)
            check_beta_length(s.bundles[i], s.cones.size(), "/bundles/" + std::to_string(i),
                              "/surface/cones");
        job.payload = s;
    } else if (mode == "elliptic") {
        job.mode = Mode::Elliptic;
        check_keys(root, {"mode", "genus", "transforms", "bundle", "bundles", "result"}, "");
        EllipticJob e;
        e.genus = parse_genus(need(root, "genus", ""), "/genus");
        const json& ts = need(root, "transforms", "");
        if (!ts.is_array()) fail("/transforms", "expected an array");
        for (std::size_t i = 0; i < ts.size(); ++i) {
            std::string path = "/transforms/" + std::to_string(i);
            require_object(ts[i], path);
            check_keys(ts[i], {"m", "a", "b"}, path);
            TransformSpec t;
            t.m = get_int(need(ts[i], "m", path), path + "/m");
            if (t.m < 1) fail(path + "/m", "multiplicity must be >= 1");
            t.a = get_int(need(ts[i], "a", path), path + "/a");
            t.b = get_int(need(ts[i], "b", path), path + "/b");
            e.transforms.push_back(t);
        }
        e.bundles = parse_bundle_list(root);
        for (std::size_t i = 0; i < e.bundles.size(); ++i)
            check_beta_length(e.bundles[i], e.transforms.size(), "/bundles/" + std::to_string(i),
                              "/transforms");
        job.payload = e;
    } else if (mode == "series") {
        job.mode = Mode::Series;
        check_keys(root, {"mode", "numerator", "denominator", "upto", "result"}, "");
        SeriesJob s;
        s.numerator = parse_pair_list(need(root, "numerator", ""), "/numerator");
        s.denominator = parse_pair_list(need(root, "denominator", ""), "/denominator");
        s.upto = get_int(need(root, "upto", ""), "/upto");
        job.payload = s;
    } else if (mode == "verify") {
        job.mode = Mode::Verify;
        check_keys(root, {"mode", "result"}, "");
        job.payload = std::monostate{};
    } else {
        fail("/mode", "unknown mode '" + mode + "'");
    }
    return job;
}

// ---- rendering -----------------------------------------------------------

namespace {

json to_json_int(const BigInt& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

json bundle_to_json(const OrbLineBundle& b) {
    return json{{"d", b.background_degree()}, {"beta", b.beta()}};
}

json chern_to_json(const ChernClass& c) {
    return json{{"f", c.f_coeff}, {"fibers", c.fiber_coeffs}, {"rendered", to_string(c)}};
}

std::string torsion_text(const OrbLineBundle& b) {
    auto n = torsion_order(b);
    return n ? std::to_string(*n) : std::string("none");
}

json torsion_json(const OrbLineBundle& b) {
    auto n = torsion_order(b);
    return n ? json(*n) : json(nullptr);
}

std::string cones_text(const std::vector<Int>& cones) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (i) os << ',';
        os << cones[i];
    }
    os << ')';
    return os.str();
}

std::string render_json(const json& doc) {
    return doc.dump(2) + "\n";
}

RunOutcome run_base(const BaseJob& job, OutputFormat format) {
    RunOutcome out;
    if (format == OutputFormat::Table) {
        std::ostringstream os;
        os << "base invariants: genus " << job.genus << ", d in [" << job.d_min << ", "
           << job.d_max << "]\n";
        for (Int d = job.d_min; d <= job.d_max; ++d)
            os << "  d = " << d << ": " << to_string(sw_base(job.genus, d)) << '\n';
        out.output = os.str();
    } else {
        json rows = json::array();
        for (Int d = job.d_min; d <= job.d_max; ++d)
            rows.push_back(json{{"d", d}, {"sw", to_json_int(sw_base(job.genus, d))}});
        json doc{{"mode", "base"},
                 {"genus", job.genus},
                 {"d_min", job.d_min},
                 {"d_max", job.d_max},
                 {"result", json{{"rows", rows}}}};
        out.output = render_json(doc);
    }
    return out;
}

RunOutcome run_seifert(const SeifertJob& job, OutputFormat format) {
    SurfacePtr surface = make_surface(job.genus, job.cones);
    SeifertFibration fib(surface, OrbLineBundle(surface, job.euler.d, job.euler.beta));
    std::vector<OrbLineBundle> bundles;
    bundles.reserve(job.bundles.size());
    for (const BundleSpec& b : job.bundles)
        bundles.emplace_back(surface, b.d, b.beta);

    RunOutcome out;
    if (format == OutputFormat::Table) {
        std::ostringstream os;
        os << "fibration: genus " << job.genus << ", cones " << cones_text(job.cones) << '\n';
        os << "euler bundle E = " << to_string(fib.euler()) << '\n';
        os << "  degree(E) = " << to_string(degree(fib.euler())) << '\n';
        os << "  torsion order: " << torsion_text(fib.euler()) << '\n';
        for (const OrbLineBundle& d : bundles) {
            os << "bundle D = " << to_string(d) << '\n';
            os << "  degree(D) = " << to_string(degree(d)) << '\n';
            os << "  members with nonzero base invariant:\n";
            for (const ClassMember& m : class_members_in_window(fib, d))
                os << "    k = " << m.k << ": " << to_string(m.bundle)
                   << "  sw_base = " << to_string(m.sw) << '\n';
            os << "  SW = " << to_string(sw_invariant(fib, d)) << '\n';
            os << "  c1(det) = " << to_string(det_c1(fib, d)) << '\n';
            os << "  real c1 degree = " << to_string(real_c1_degree(fib, d)) << '\n';
        }
        out.output = os.str();
    } else {
        json jbundles = json::array();
        json results = json::array();
        for (const OrbLineBundle& d : bundles) {
            jbundles.push_back(bundle_to_json(d));
            json members = json::array();
            for (const ClassMember& m : class_members_in_window(fib, d)) {
                json jm = bundle_to_json(m.bundle);
                jm["k"] = m.k;
                jm["sw_base"] = to_json_int(m.sw);
                members.push_back(jm);
            }
            results.push_back(json{{"invariant", to_string(d)},
                                   {"degree", to_string(degree(d))},
                                   {"members", members},
                                   {"sw", to_json_int(sw_invariant(fib, d))},
                                   {"det_c1", chern_to_json(det_c1(fib, d))},
                                   {"real_c1_degree", to_string(real_c1_degree(fib, d))}});
        }
        json doc{{"mode", "seifert"},
                 {"surface", json{{"genus", job.genus}, {"cones", job.cones}}},
                 {"euler", bundle_to_json(fib.euler())},
                 {"bundles", jbundles},
                 {"result", json{{"euler", json{{"degree", to_string(degree(fib.euler()))},
                                                {"torsion_order", torsion_json(fib.euler())}}},
                                 {"bundles", results}}}};
        out.output = render_json(doc);
    }
    return out;
}

RunOutcome render_elliptic(const EllipticSurface& es, const std::vector<OrbLineBundle>& bundles,
                           const EllipticJob& job, OutputFormat format, RunOutcome out);

RunOutcome run_elliptic(const EllipticJob& job, OutputFormat format) {
    std::vector<LogTransform> transforms;
    transforms.reserve(job.transforms.size());
    for (const TransformSpec& t : job.transforms) transforms.push_back({t.m, t.a, t.b});
    EllipticSurface es(job.genus, std::move(transforms));
    std::vector<OrbLineBundle> bundles;
    bundles.reserve(job.bundles.size());
    for (const BundleSpec& b : job.bundles)
        bundles.emplace_back(es.surface(), b.d, b.beta);

    RunOutcome out;
    if (job.genus == 0 && !is_kahler(es))
        out.diagnostics += "warning: genus-0 non-Kahler data has no positive-dimensional "
                           "self-dual cohomology; invariants below are outside the supported "
                           "hypotheses\n";

    try {
        return render_elliptic(es, bundles, job, format, out);
    } catch (const DomainError& e) {
        out.output.clear();
        out.diagnostics += std::string("error: ") + e.what() + "\n";
        out.exit_code = 1;
        return out;
    }
}

RunOutcome render_elliptic(const EllipticSurface& es, const std::vector<OrbLineBundle>& bundles,
                           const EllipticJob& job, OutputFormat format, RunOutcome out) {
    if (format == OutputFormat::Table) {
        std::ostringstream os;
        os << "elliptic surface: genus " << job.genus << ", transforms (m,a,b):";
        if (job.transforms.empty()) os << " none";
        for (const TransformSpec& t : job.transforms)
            os << " (" << t.m << ',' << t.a << ',' << t.b << ')';
        os << '\n';
        os << "E1 = " << to_string(es.e1()) << "  degree = " << to_string(degree(es.e1()))
           << "  torsion order: " << torsion_text(es.e1()) << '\n';
        os << "E2 = " << to_string(es.e2()) << "  degree = " << to_string(degree(es.e2()))
           << "  torsion order: " << torsion_text(es.e2()) << '\n';
        os << "kahler: " << (is_kahler(es) ? "yes" : "no") << '\n';
        os << "b2+ = " << b2_plus(es) << '\n';
        for (const OrbLineBundle& d : bundles) {
            os << "bundle D = " << to_string(d) << '\n';
            os << "  members with nonzero base invariant:\n";
            for (const OrbitMember& m : orbit_members_in_window(es, d))
                os << "    " << to_string(m.bundle) << "  sw_base = " << to_string(m.sw) << '\n';
            os << "  SW = " << to_string(sw_invariant(es, d)) << '\n';
            os << "  c1(det) = " << to_string(det_c1(es, d)) << '\n';
            os << "  real c1 degree = " << to_string(real_c1_degree(d)) << '\n';
        }
        out.output = os.str();
    } else {
        json jtransforms = json::array();
        for (const TransformSpec& t : job.transforms)
            jtransforms.push_back(json{{"m", t.m}, {"a", t.a}, {"b", t.b}});
        json jbundles = json::array();
        json results = json::array();
        for (const OrbLineBundle& d : bundles) {
            jbundles.push_back(bundle_to_json(d));
            json members = json::array();
            for (const OrbitMember& m : orbit_members_in_window(es, d)) {
                json jm = bundle_to_json(m.bundle);
                jm["sw_base"] = to_json_int(m.sw);
                members.push_back(jm);
            }
            results.push_back(json{{"invariant", to_string(d)},
                                   {"members", members},
                                   {"sw", to_json_int(sw_invariant(es, d))},
                                   {"det_c1", chern_to_json(det_c1(es, d))},
                                   {"real_c1_degree", to_string(real_c1_degree(d))}});
        }
        auto gen_json = [&](const OrbLineBundle& g) {
            return json{{"invariant", to_string(g)},
                        {"degree", to_string(degree(g))},
                        {"torsion_order", torsion_json(g)}};
        };
        json doc{{"mode", "elliptic"},
                 {"genus", job.genus},
                 {"transforms", jtransforms},
                 {"bundles", jbundles},
                 {"result", json{{"e1", gen_json(es.e1())},
                                 {"e2", gen_json(es.e2())},
                                 {"kahler", is_kahler(es)},
                                 {"b2_plus", b2_plus(es)},
                                 {"bundles", results}}}};
        out.output = render_json(doc);
    }
    return out;
}

LaurentPoly poly_from_pairs(const std::vector<std::pair<Int, BigInt>>& pairs) {
    LaurentPoly p;
    for (const auto& [e, c] : pairs) p.add_term(e, c);
    return p;
}

RunOutcome run_series(const SeriesJob& job, OutputFormat format) {
    LaurentPoly num = poly_from_pairs(job.numerator);
    LaurentPoly den = poly_from_pairs(job.denominator);
    TruncatedSeries s = series_expand(num, den, job.upto);

    RunOutcome out;
    if (format == OutputFormat::Table) {
        std::ostringstream os;
        os << "series: (" << to_string(num) << ") / (" << to_string(den) << ") through t^"
           << job.upto << '\n';
        os << "  = " << to_string(s) << '\n';
        for (Int e = s.low(); e <= s.upto(); ++e)
            os << "  t^" << e << ": " << to_string(s.coeff(e)) << '\n';
        out.output = os.str();
    } else {
        auto pairs_json = [](const std::vector<std::pair<Int, BigInt>>& pairs) {
            json a = json::array();
            for (const auto& [e, c] : pairs) a.push_back(json::array({json(e), to_json_int(c)}));
            return a;
        };
        json coeffs = json::array();
        for (const BigInt& c : s.coeffs()) coeffs.push_back(to_json_int(c));
        json doc{{"mode", "series"},
                 {"numerator", pairs_json(job.numerator)},
                 {"denominator", pairs_json(job.denominator)},
                 {"upto", job.upto},
                 {"result", json{{"low", s.low()}, {"upto", s.upto()}, {"coeffs", coeffs}}}};
        out.output = render_json(doc);
    }
    return out;
}

RunOutcome run_verify_mode(OutputFormat format) {
    VerifyReport report = run_verify_suite();
    RunOutcome out;
    if (format == OutputFormat::Table) {
        std::ostringstream os;
        for (const VerifyCheck& c : report.checks)
            os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << '\n';
        os << "verify: " << report.passed_count() << '/' << report.checks.size()
           << " checks passed\n";
        out.output = os.str();
    } else {
        json checks = json::array();
        for (const VerifyCheck& c : report.checks)
            checks.push_back(json{{"name", c.name}, {"passed", c.passed}});
        json doc{{"mode", "verify"},
                 {"result", json{{"checks", checks},
                                 {"passed", report.passed_count()},
                                 {"total", report.checks.size()}}}};
        out.output = render_json(doc);
    }
    out.exit_code = report.all_passed() ? 0 : 3;
    return out;
}

} // namespace

RunOutcome run(const JobSpec& job) {
    try {
        switch (job.mode) {
        case Mode::Base:
            return run_base(std::get<BaseJob>(job.payload), job.format);
        case Mode::Seifert:
            return run_seifert(std::get<SeifertJob>(job.payload), job.format);
        case Mode::Elliptic:
            return run_elliptic(std::get<EllipticJob>(job.payload), job.format);
        case Mode::Series:
            return run_series(std::get<SeriesJob>(job.payload), job.format);
        case Mode::Verify:
            return run_verify_mode(job.format);
        }
        return {1, "", "error: unknown mode\n"};
    } catch (const DomainError& e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    } catch (const StructuralError& e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace orbsw

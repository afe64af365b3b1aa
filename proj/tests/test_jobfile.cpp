#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "orbsw/errors.hpp"
#include "orbsw/jobfile.hpp"

using namespace orbsw;
using nlohmann::json;

namespace {

const char* const kGenus5Job = R"({
  "mode": "seifert",
  "surface": {"genus": 5, "cones": [3, 5, 7]},
  "euler": {"d": 1, "beta": [2, 3, 5]},
  "bundle": {"d": 2, "beta": [1, 1, 1]}
})";

JobSpec parsed(const std::string& text, OutputFormat format = OutputFormat::Table) {
    JobSpec job = parse_input(text);
    job.format = format;
    return job;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("strict parsing rejects malformed documents") {
    CHECK_THROWS_AS(parse_input("{"), ParseError);
    CHECK_THROWS_AS(parse_input("[]"), ParseError);
    CHECK_THROWS_AS(parse_input("{\"genus\": 1}"), ParseError); // no mode
    CHECK_THROWS_WITH_AS(parse_input(R"({"mode": "frobnicate"})"),
                         "/mode: unknown mode 'frobnicate'", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_input(R"({"mode": "base", "genus": 1, "d_min": 0, "d_max": 2, "bogus": 3})"),
        "/bogus: unknown field", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_input(R"({"mode": "base", "genus": 1.5, "d_min": 0, "d_max": 2})"),
        "/genus: expected an integer (floats are not accepted)", ParseError);
    CHECK_THROWS_WITH_AS(parse_input(R"({"mode": "base", "genus": -1, "d_min": 0, "d_max": 2})"),
                         "/genus: genus must be >= 0", ParseError);
    CHECK_THROWS_WITH_AS(parse_input(R"({"mode": "base", "genus": 1, "d_min": 3, "d_max": 2})"),
                         "/d_min: d_min exceeds d_max", ParseError);
}

TEST_CASE("strict parsing for fibration jobs") {
    // beta length must match the cone list, and the message names both
    CHECK_THROWS_WITH_AS(parse_input(R"({
        "mode": "seifert",
        "surface": {"genus": 0, "cones": [2, 3]},
        "euler": {"d": 0, "beta": [1]},
        "bundle": {"d": 0, "beta": [0, 0]}
    })"),
                         "/euler/beta: length 1 does not match /surface/cones length 2",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_input(R"({
        "mode": "seifert",
        "surface": {"genus": 0, "cones": [0, 3]},
        "euler": {"d": 0, "beta": [1, 1]},
        "bundle": {"d": 0, "beta": [0, 0]}
    })"),
                         "/surface/cones/0: cone multiplicity must be >= 1", ParseError);
    // exactly one of bundle / bundles
    CHECK_THROWS_AS(parse_input(R"({
        "mode": "seifert",
        "surface": {"genus": 1, "cones": [2]},
        "euler": {"d": 0, "beta": [1]},
        "bundle": {"d": 0, "beta": [0]},
        "bundles": [{"d": 0, "beta": [0]}]
    })"),
                    ParseError);
    CHECK_THROWS_WITH_AS(parse_input(R"({
        "mode": "seifert",
        "surface": {"genus": 1, "cones": [2]},
        "euler": {"d": 0, "beta": [1]}
    })"),
                         "/bundle: missing required field (or bundles)", ParseError);
}

TEST_CASE("strict parsing for elliptic and series jobs") {
    CHECK_THROWS_WITH_AS(parse_input(R"({
        "mode": "elliptic",
        "genus": 1,
        "transforms": [{"m": 0, "a": 1, "b": 1}],
        "bundle": {"d": 0, "beta": [0]}
    })"),
                         "/transforms/0/m: multiplicity must be >= 1", ParseError);
    CHECK_THROWS_WITH_AS(parse_input(R"({
        "mode": "elliptic",
        "genus": 1,
        "transforms": [{"m": 2, "a": 1, "b": 1}],
        "bundle": {"d": 0, "beta": [0, 0]}
    })"),
                         "/bundles/0/beta: length 2 does not match /transforms length 1",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_input(R"({
        "mode": "series",
        "numerator": [[0, 1], [0, 2]],
        "denominator": [[-1, 1], [1, -1]],
        "upto": 4
    })"),
                         "/numerator/1: duplicate exponent 0", ParseError);
    CHECK_THROWS_AS(parse_input(R"({
        "mode": "series",
        "numerator": [[0, 1, 2]],
        "denominator": [[0, 1]],
        "upto": 4
    })"),
                    ParseError);
}

TEST_CASE("the result field is known and skipped") {
    JobSpec job = parsed(R"({"mode": "base", "genus": 1, "d_min": 0, "d_max": 0,
                             "result": {"anything": [1, 2, 3]}})");
    CHECK(job.mode == Mode::Base);
    CHECK_THROWS_WITH_AS(
        parse_input(R"({"mode": "base", "genus": 1, "d_min": 0, "d_max": 0, "result": 5})"),
        "/result: expected an object", ParseError);
}

TEST_CASE("base mode tables and machine output") {
    RunOutcome out = run(parsed(R"({"mode": "base", "genus": 5, "d_min": -1, "d_max": 8})"));
    CHECK(out.exit_code == 0);
    CHECK(contains(out.output, "  d = -1: 0\n"));
    CHECK(contains(out.output, "  d = 0: 1\n"));
    CHECK(contains(out.output, "  d = 4: 70\n"));
    CHECK(contains(out.output, "  d = 7: -8\n"));

    RunOutcome m = run(parsed(R"({"mode": "base", "genus": 0, "d_min": 0, "d_max": 3})",
                              OutputFormat::Machine));
    json doc = json::parse(m.output);
    CHECK(doc["result"]["rows"][2]["sw"] == 3);
    CHECK(doc["result"]["rows"][3]["d"] == 3);
}

TEST_CASE("fibration job reproduces the genus-5 table") {
    RunOutcome out = run(parsed(kGenus5Job));
    CHECK(out.exit_code == 0);
    CHECK(out.diagnostics.empty());
    CHECK(contains(out.output, "euler bundle E = (1,(3,2),(5,3),(7,5))\n"));
    CHECK(contains(out.output, "  degree(E) = 313/105\n"));
    CHECK(contains(out.output, "  torsion order: none\n"));
    CHECK(contains(out.output, "  degree(D) = 281/105\n"));
    CHECK(contains(out.output, "    k = 0: (2,(3,1),(5,1),(7,1))  sw_base = 28\n"));
    CHECK(contains(out.output, "    k = 1: (4,(3,0),(5,4),(7,6))  sw_base = 70\n"));
    CHECK(contains(out.output, "    k = 2: (7,(3,2),(5,2),(7,4))  sw_base = -8\n"));
    CHECK(contains(out.output, "  SW = 90\n"));
    CHECK(contains(out.output, "  c1(det) = -4F - 2F2 - 4F3\n"));
    CHECK(contains(out.output, "  real c1 degree = -174/35\n"));
}

TEST_CASE("machine output round-trips as input, byte for byte") {
    JobSpec first = parsed(kGenus5Job, OutputFormat::Machine);
    RunOutcome a = run(first);
    CHECK(a.exit_code == 0);

    json doc = json::parse(a.output);
    CHECK(doc["result"]["bundles"][0]["sw"] == 90);
    CHECK(doc["result"]["bundles"][0]["members"].size() == 3);
    CHECK(doc["result"]["bundles"][0]["det_c1"]["rendered"] == "-4F - 2F2 - 4F3");
    CHECK(doc["result"]["euler"]["torsion_order"].is_null());

    JobSpec second = parsed(a.output, OutputFormat::Machine);
    RunOutcome b = run(second);
    CHECK(b.output == a.output);

    // determinism of repeated runs
    RunOutcome c = run(first);
    CHECK(c.output == a.output);
}

TEST_CASE("torsion fibration job round-trip") {
    const char* text = R"({
        "mode": "seifert",
        "surface": {"genus": 0, "cones": [2, 3, 6]},
        "euler": {"d": -2, "beta": [1, 2, 5]},
        "bundles": [{"d": 2, "beta": [0, 0, 1]}, {"d": 0, "beta": [0, 0, 0]}]
    })";
    RunOutcome table = run(parsed(text));
    CHECK(table.exit_code == 0);
    CHECK(contains(table.output, "  torsion order: 6\n"));
    CHECK(contains(table.output, "  SW = 13\n"));
    CHECK(contains(table.output, "  SW = 1\n"));

    RunOutcome a = run(parsed(text, OutputFormat::Machine));
    json doc = json::parse(a.output);
    CHECK(doc["result"]["euler"]["torsion_order"] == 6);
    CHECK(doc["result"]["bundles"][0]["sw"] == 13);
    CHECK(doc["result"]["bundles"][1]["sw"] == 1);
    RunOutcome b = run(parsed(a.output, OutputFormat::Machine));
    CHECK(b.output == a.output);
}

TEST_CASE("elliptic job output") {
    const char* text = R"({
        "mode": "elliptic",
        "genus": 1,
        "transforms": [{"m": 2, "a": 1, "b": 0}, {"m": 2, "a": -1, "b": 1}],
        "bundle": {"d": 0, "beta": [0, 0]}
    })";
    RunOutcome out = run(parsed(text));
    CHECK(out.exit_code == 0);
    CHECK(contains(out.output, "E1 = (-1,(2,1),(2,1))  degree = 0  torsion order: 2\n"));
    CHECK(contains(out.output, "E2 = (0,(2,0),(2,1))  degree = 1/2  torsion order: none\n"));
    CHECK(contains(out.output, "kahler: no\n"));
    CHECK(contains(out.output, "b2+ = 2\n"));
    CHECK(contains(out.output, "  SW = 4\n"));

    RunOutcome a = run(parsed(text, OutputFormat::Machine));
    json doc = json::parse(a.output);
    CHECK(doc["result"]["kahler"] == false);
    CHECK(doc["result"]["b2_plus"] == 2);
    CHECK(doc["result"]["bundles"][0]["sw"] == 4);
    CHECK(doc["result"]["bundles"][0]["members"].size() == 4);
    RunOutcome b = run(parsed(a.output, OutputFormat::Machine));
    CHECK(b.output == a.output);
}

TEST_CASE("series job output") {
    const char* text = R"({
        "mode": "series",
        "numerator": [[0, 1]],
        "denominator": [[-2, 1], [0, -2], [2, 1]],
        "upto": 12
    })";
    RunOutcome out = run(parsed(text));
    CHECK(out.exit_code == 0);
    CHECK(contains(out.output, "  t^2: 1\n"));
    CHECK(contains(out.output, "  t^8: 4\n"));
    CHECK(contains(out.output, "  t^12: 6\n"));

    RunOutcome a = run(parsed(text, OutputFormat::Machine));
    json doc = json::parse(a.output);
    CHECK(doc["result"]["low"] == 2);
    CHECK(doc["result"]["coeffs"] == json::array({1, 0, 2, 0, 3, 0, 4, 0, 5, 0, 6}));
    RunOutcome b = run(parsed(a.output, OutputFormat::Machine));
    CHECK(b.output == a.output);

    const char* alt = R"({
        "mode": "series",
        "numerator": [[0, 1], [2, -1], [4, 1]],
        "denominator": [[0, 1], [2, -2], [4, 1]],
        "upto": 10
    })";
    json alt_doc = json::parse(run(parsed(alt, OutputFormat::Machine)).output);
    CHECK(alt_doc["result"]["low"] == 0);
    CHECK(alt_doc["result"]["coeffs"] == json::array({1, 0, 1, 0, 2, 0, 3, 0, 4, 0, 5}));
}

TEST_CASE("domain errors surface as exit code 1") {
    // genus-0 fibration whose class sum has no finite support
    RunOutcome divergent = run(parsed(R"({
        "mode": "seifert",
        "surface": {"genus": 0, "cones": [2, 3]},
        "euler": {"d": 0, "beta": [1, 1]},
        "bundle": {"d": 1, "beta": [0, 0]}
    })"));
    CHECK(divergent.exit_code == 1);
    CHECK(divergent.output.empty());
    CHECK(contains(divergent.diagnostics, "error: "));

    // series denominators must start with a unit coefficient
    RunOutcome unit = run(parsed(R"({
        "mode": "series",
        "numerator": [[0, 1]],
        "denominator": [[0, 2]],
        "upto": 4
    })"));
    CHECK(unit.exit_code == 1);
    CHECK(contains(unit.diagnostics, "error: "));
}

TEST_CASE("genus-0 elliptic data outside the kahler case warns, then fails") {
    RunOutcome out = run(parsed(R"({
        "mode": "elliptic",
        "genus": 0,
        "transforms": [{"m": 2, "a": 1, "b": 1}],
        "bundle": {"d": 0, "beta": [0]}
    })"));
    CHECK(out.exit_code == 1);
    CHECK(contains(out.diagnostics, "warning: "));
    CHECK(contains(out.diagnostics, "error: "));
    CHECK(out.output.empty());

    RunOutcome ok = run(parsed(R"({
        "mode": "elliptic",
        "genus": 0,
        "transforms": [{"m": 2, "a": 1, "b": 0}, {"m": 2, "a": -1, "b": 0}],
        "bundle": {"d": 0, "beta": [0, 0]}
    })"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.diagnostics.empty());
    CHECK(contains(ok.output, "kahler: yes\n"));
    CHECK(contains(ok.output, "  SW = 1\n"));
}

TEST_CASE("verify mode reports its checks") {
    RunOutcome out = run(parsed(R"({"mode": "verify"})"));
    CHECK(out.exit_code == 0);
    CHECK(contains(out.output, "[PASS] "));
    CHECK(!contains(out.output, "[FAIL] "));
    CHECK(contains(out.output, " checks passed\n"));

    RunOutcome m = run(parsed(R"({"mode": "verify"})", OutputFormat::Machine));
    json doc = json::parse(m.output);
    CHECK(doc["result"]["passed"] == doc["result"]["total"]);
    CHECK(m.exit_code == 0);
}

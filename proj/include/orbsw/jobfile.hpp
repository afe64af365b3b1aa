#ifndef ORBSW_JOBFILE_HPP
#define ORBSW_JOBFILE_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orbsw/numeric.hpp"

namespace orbsw {

// One job per input document. The document is strict JSON: unknown
// fields are rejected, every number must be an integer (never a float),
// and a `result` object (as emitted by machine output) is accepted and
// ignored, so machine output is itself a valid job document.

enum class Mode { Base, Seifert, Elliptic, Series, Verify };
enum class OutputFormat { Table, Machine };

struct BundleSpec {
    Int d = 0;
    std::vector<Int> beta;
};

struct BaseJob {
    Int genus = 0;
    Int d_min = 0;
    Int d_max = 0;
};

struct SeifertJob {
    Int genus = 0;
    std::vector<Int> cones;
    BundleSpec euler;
    std::vector<BundleSpec> bundles;
};

struct TransformSpec {
    Int m = 1;
    Int a = 0;
    Int b = 0;
};

struct EllipticJob {
    Int genus = 0;
    std::vector<TransformSpec> transforms;
    std::vector<BundleSpec> bundles;
};

struct SeriesJob {
    std::vector<std::pair<Int, BigInt>> numerator;   // exponent -> coefficient
    std::vector<std::pair<Int, BigInt>> denominator;
    Int upto = 0;
};

struct JobSpec {
    Mode mode = Mode::Verify;
    OutputFormat format = OutputFormat::Table;
    std::variant<std::monostate, BaseJob, SeifertJob, EllipticJob, SeriesJob> payload;
};

// Throws ParseError with a field-addressed message on any violation.
JobSpec parse_input(const std::string& text);

struct RunOutcome {
    int exit_code = 0;        // 0 ok, 1 computation-domain error, 3 verify failure
    std::string output;       // rendered table or machine document
    std::string diagnostics;  // warnings and error messages, for stderr
};

// Executes the job and renders it in the requested format. Deterministic:
// identical JobSpecs produce byte-identical output.
RunOutcome run(const JobSpec& job);

} // namespace orbsw

#endif

// Command-line driver: reads one job document, prints the rendered
// result, and exits 0 on success, 1 on computation-domain errors, 2 on
// parse errors, 3 on verify failures.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orbsw/errors.hpp"
#include "orbsw/jobfile.hpp"

namespace {

int run_tool(const std::string& input, const std::string& format, const std::string& out_path) {
    orbsw::JobSpec job;
    if (input == "verify") {
        job.mode = orbsw::Mode::Verify;
    } else {
        std::ifstream in(input, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read input file '" << input << "'\n";
            return 2;
        }
        std::ostringstream text;
        text << in.rdbuf();
        try {
            job = orbsw::parse_input(text.str());
        } catch (const orbsw::ParseError& e) {
            std::cerr << "error: " << input << ": " << e.what() << '\n';
            return 2;
        }
    }
    job.format = format == "machine" ? orbsw::OutputFormat::Machine : orbsw::OutputFormat::Table;

    orbsw::RunOutcome outcome = orbsw::run(job);
    if (!outcome.diagnostics.empty()) std::cerr << outcome.diagnostics;
    if (out_path.empty()) {
        std::cout << outcome.output;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << outcome.output;
        if (!out) {
            std::cerr << "error: cannot write output file '" << out_path << "'\n";
            return 2;
        }
    }
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Seiberg-Witten invariants of Seifert fibered spaces "
                 "and minimal non-Kahler elliptic surfaces"};
    std::string input;
    std::string format = "table";
    std::string out_path;
    app.add_option("input", input, "job document (JSON), or 'verify' for the built-in checks")
        ->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "machine"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return run_tool(input, format, out_path);
}

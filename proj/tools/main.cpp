#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fpsr/errors.hpp"
#include "fpsr/problem.hpp"
#include "fpsr/report.hpp"

namespace {

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Formal power-series solutions of polynomial ODEs at a singular point, with a certified radius bound"};

    std::string input;
    std::string output;
    std::string format = "json";
    std::optional<std::size_t> terms;
    std::string grid;
    std::size_t oracle_depth = 12;
    std::optional<unsigned long> seed;
    bool require_certificate = false;

    app.add_option("-i,--input", input, "Problem file, '-' for stdin")->required();
    app.add_option("-o,--output", output, "Write the report here instead of stdout");
    app.add_option("-f,--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--terms", terms, "Number of tail coefficients (overrides the file)");
    app.add_option("--grid", grid, "Polydisk radii, e.g. \"r=1,10;rho=1/2,1,2\"");
    app.add_option("--oracle-depth", oracle_depth, "Coefficients cross-checked by the explicit engine")
        ->capture_default_str();
    app.add_option("--seed", seed, "Reserved for the fuzz harness");
    app.add_flag("--require-certificate", require_certificate,
                 "Fail with exit code 3 when no convergence certificate applies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        std::string text;
        if (input == "-") {
            text = read_all(std::cin);
        } else {
            std::ifstream in(input, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot open " << input << "\n";
                return 1;
            }
            text = read_all(in);
        }

        fpsr::ProblemFile pf = fpsr::parse_problem(text);
        fpsr::RunOptions opts;
        opts.oracle_depth = oracle_depth;
        opts.require_certificate = require_certificate;
        opts.terms = terms;
        if (!grid.empty()) opts.grid = fpsr::parse_grid(grid);

        const fpsr::Format fmt = format == "csv"    ? fpsr::Format::csv
                                 : format == "text" ? fpsr::Format::text
                                                    : fpsr::Format::json;
        const std::string bytes = fpsr::emit(fpsr::run(pf, opts), fmt);
        if (output.empty()) {
            std::cout << bytes;
        } else {
            std::ofstream out(output, std::ios::binary);
            out << bytes;
            if (!out) {
                std::cerr << "error: cannot write " << output << "\n";
                return 1;
            }
        }
        return 0;
    } catch (const fpsr::Error& e) {
        std::cerr << "error (" << fpsr::to_string(e.kind()) << "): " << e.what() << "\n";
        return fpsr::exit_code(e.kind());
    }
}

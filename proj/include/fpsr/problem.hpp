#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpsr/linearization.hpp"
#include "fpsr/majorant.hpp"
#include "fpsr/mpoly.hpp"
#include "fpsr/rational.hpp"

namespace fpsr {

/// Parses an expression in z, u0..un (y0..yn accepted as synonyms), rational
/// and decimal literals, + - * / ^ and parentheses. Division is only by
/// nonzero constants; exponents are nonnegative integer literals.
/// `line`/`column` locate the first character of `text` for error reports.
MPoly parse_equation(std::string_view text, std::size_t n, int line = 1, int column = 1);

enum class Mode { full, polygon_only, solve_only };

const char* to_string(Mode m);

/// Contents of a problem file:
///
///     order = 1
///     F = "u1 - u0^2 - z"
///     prefix = ["1"]
///     terms = 100
///     r = ["1", "10"]          # optional polydisk radii
///     rho = ["1/2", "1", "2"]  # optional
///     mode = "full"            # optional
struct ProblemFile {
    std::size_t order = 0;
    std::string equation;
    MPoly F;
    std::vector<Rational> prefix;
    std::size_t terms = 0;
    std::optional<std::vector<Rational>> grid_r;
    std::optional<std::vector<Rational>> grid_rho;
    Mode mode = Mode::full;

    Problem problem() const { return {F, prefix, terms}; }
    PolydiskGrid grid() const;
};

/// Throws ParseError with the line and column of the offending token.
ProblemFile parse_problem(std::string_view text);

/// "r=1,10;rho=1/2,1,2" as accepted by --grid.
PolydiskGrid parse_grid(std::string_view text);

}  // namespace fpsr

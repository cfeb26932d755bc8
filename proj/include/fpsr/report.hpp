#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpsr/diagnostics.hpp"
#include "fpsr/errors.hpp"
#include "fpsr/majorant.hpp"
#include "fpsr/newton_polygon.hpp"
#include "fpsr/problem.hpp"
#include "fpsr/reduction.hpp"
#include "fpsr/solver.hpp"

namespace fpsr {

struct RunOptions {
    /// Coefficients cross-checked against the explicit engine.
    std::size_t oracle_depth = 12;
    /// Irregular points fail with hypothesis_violation instead of
    /// downgrading to a formal-solution report.
    bool require_certificate = false;
    std::optional<std::size_t> terms;
    std::optional<PolydiskGrid> grid;
};

/// One coefficient a_i of the linearized operator, by its lowest term.
struct OperatorTerm {
    std::optional<std::size_t> valuation;
    Rational leading;
};

struct CertificateSection {
    SigmaBound sigma;
    std::vector<Rational> C;
    RadiusCertificate best;
    CriticalPoint critical;
    MajorantCheck check;
    std::optional<RadiusEstimate> majorant_radius;
};

struct Report {
    ProblemFile input;
    std::size_t terms = 0;
    std::size_t op_trunc = 0;
    std::vector<OperatorTerm> linearized;
    Polygon polygon;
    std::vector<Rational> slopes;
    bool fuchsian = true;
    GevreyCandidates gevrey;

    std::optional<Reduction> reduction;
    /// c_1..c_(k+J) of phi and c_1..c_J of psi.
    std::vector<Rational> phi;
    std::vector<Rational> psi;
    std::size_t oracle_checked = 0;
    std::optional<ResidualOrder> residual;

    /// "certified", "not applicable (irregular singular point)" or "not requested".
    std::string certificate_status;
    std::optional<CertificateSection> certificate;
    std::optional<GrowthReport> growth;
};

/// Runs the pipeline the mode asks for. Module errors propagate unchanged.
Report run(const ProblemFile& pf, const RunOptions& options = {});

enum class Format { json, csv, text };

/// Byte-deterministic rendering of a report.
std::string emit(const Report& report, Format format);

/// 0 on success, 2..6 for the contract errors, 7..10 for the remaining
/// library errors and 1 for invalid arguments.
int exit_code(ErrorKind kind);

}  // namespace fpsr

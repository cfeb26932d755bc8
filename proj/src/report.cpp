#include "fpsr/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "fpsr/linearization.hpp"

namespace fpsr {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kIrregular = "not applicable (irregular singular point)";

std::string six_digits(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

Json rationals(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

std::string decimal30(const Decimal30& x) { return x.str(15, std::ios_base::fmtflags(0)); }

void solve_section(Report& rep, const MPoly& F, const Reduction& red, std::size_t oracle_depth) {
    const std::size_t J = rep.terms;
    SolutionTail tail = solve_substitution(red, J);
    const std::size_t depth = std::min(J, oracle_depth);
    if (depth > 0) {
        SolutionTail oracle = solve_explicit(red, depth);
        for (std::size_t j = 0; j < depth; ++j)
            if (oracle.c[j] != tail.c[j])
                throw Error(ErrorKind::internal_consistency,
                            "solver engines disagree at c_" + std::to_string(j + 1) + ": " + tail.c[j].str() +
                                " vs " + oracle.c[j].str(),
                            static_cast<long>(j + 1));
    }
    rep.oracle_checked = depth;

    USeries phi = recombine(red.prefix, red.k, tail);
    rep.phi.assign(phi.coeffs().begin() + 1, phi.coeffs().end());
    rep.psi = tail.c;

    const std::size_t through = red.k + red.l + J;
    rep.residual = polynomial_residual_order(F, phi.coeffs(), through);
    if (rep.residual->value < through + 1)
        throw Error(ErrorKind::internal_consistency,
                    "residual order " + rep.residual->str() + " below k + l + J + 1 = " + std::to_string(through + 1));

    if (J >= 2) rep.growth = growth_report(rep.psi, Window::upper_half(J));
}

void certificate_section(Report& rep, const Reduction& red, const PolydiskGrid& grid) {
    const std::size_t n = red.order();
    CertificateSection cs;
    cs.sigma = sigma_lower_bound(red.Lbar, red.k, n);
    cs.C = majorant_coeffs(build_majorant(red.M), cs.sigma.sigma, n, rep.terms);
    cs.check = majorant_report(rep.psi, cs.C);
    cs.best = optimize_polydisk(red.M, cs.sigma.sigma, n, grid);
    cs.critical = critical_point_check(cs.best.sigma, n, cs.best.r, cs.best.rho, cs.best.mu);
    if (rep.terms >= 2) cs.majorant_radius = empirical_radius(cs.C, Window::upper_half(rep.terms));
    rep.certificate = std::move(cs);
    rep.certificate_status = "certified";
}

Json reduction_json(const Reduction& red) {
    Json j;
    j["l"] = red.l;
    j["b"] = rationals(red.b);
    j["Lbar"] = rationals(red.Lbar.coeffs());
    j["Lbar_text"] = red.Lbar.str("xi");
    j["k0"] = red.k0;
    j["k"] = red.k;
    j["M"] = red.M.str();
    j["fuchsian_data"] = red.fuchsian;
    return j;
}

Json to_json(const Report& rep) {
    Json j;
    Json input;
    input["order"] = rep.input.order;
    input["equation"] = rep.input.equation;
    input["prefix"] = rationals(rep.input.prefix);
    input["terms"] = rep.terms;
    input["mode"] = to_string(rep.input.mode);
    j["input"] = input;

    Json op;
    op["truncation"] = rep.op_trunc;
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < rep.linearized.size(); ++i) {
        Json a;
        a["i"] = i;
        if (rep.linearized[i].valuation) {
            a["valuation"] = *rep.linearized[i].valuation;
            a["leading"] = rep.linearized[i].leading.str();
        } else {
            a["valuation"] = nullptr;
            a["leading"] = nullptr;
        }
        coeffs.push_back(a);
    }
    op["coefficients"] = coeffs;
    j["linearized_operator"] = op;

    Json poly;
    Json verts = Json::array();
    for (const auto& v : rep.polygon.vertices) verts.push_back(Json::array({v.x, v.y}));
    poly["vertices"] = verts;
    Json edges = Json::array();
    for (const auto& e : rep.polygon.edges) {
        Json ej;
        ej["from"] = e.x_from;
        ej["to"] = e.x_to;
        ej["slope"] = e.slope.str();
        edges.push_back(ej);
    }
    poly["edges"] = edges;
    j["polygon"] = poly;

    Json cls;
    cls["kind"] = rep.fuchsian ? "fuchsian" : "irregular";
    cls["slopes"] = rationals(rep.slopes);
    cls["gevrey_candidates"] = rationals(rep.gevrey.orders);
    cls["gevrey_bound"] = rep.gevrey.gevrey_bound ? Json(rep.gevrey.gevrey_bound->str()) : Json(nullptr);
    j["classification"] = cls;

    j["reduction"] = rep.reduction ? reduction_json(*rep.reduction) : Json(nullptr);

    Json co;
    co["phi"] = rationals(rep.phi);
    co["psi"] = rationals(rep.psi);
    co["oracle_checked"] = rep.oracle_checked;
    j["coefficients"] = co;
    j["residual_order"] = rep.residual ? Json(rep.residual->str()) : Json(nullptr);

    Json maj;
    maj["status"] = rep.certificate_status;
    if (rep.certificate) {
        const auto& cs = *rep.certificate;
        Json sigma;
        sigma["value"] = cs.sigma.sigma.str();
        sigma["finite_min"] = cs.sigma.finite_min.str();
        sigma["tail_limit"] = cs.sigma.tail_limit.str();
        sigma["j_star"] = cs.sigma.j_star;
        maj["sigma"] = sigma;
        maj["C"] = rationals(cs.C);
        Json cert;
        cert["sigma"] = cs.best.sigma.str();
        cert["r"] = cs.best.r.str();
        cert["rho"] = cs.best.rho.str();
        cert["mu"] = cs.best.mu.str();
        cert["bigN"] = cs.best.bigN.str();
        cert["R"] = cs.best.R.str();
        cert["R_decimal"] = cs.best.R.to_decimal(12);
        maj["certificate"] = cert;
        Json cp;
        cp["w0"] = decimal30(cs.critical.w0);
        cp["z0"] = decimal30(cs.critical.z0);
        cp["iterations"] = cs.critical.iterations;
        maj["critical_point"] = cp;
    }
    j["majorant"] = maj;

    Json diag;
    if (rep.growth) {
        diag["empirical_radius"] = rep.growth->empirical_radius.str();
        diag["gevrey_estimate"] =
            rep.growth->gevrey_estimate ? Json(six_digits(*rep.growth->gevrey_estimate)) : Json(nullptr);
        diag["window"] = Json::array({rep.growth->window.j_min, rep.growth->window.j_max});
    } else {
        diag["empirical_radius"] = nullptr;
        diag["gevrey_estimate"] = nullptr;
        diag["window"] = nullptr;
    }
    if (rep.certificate) {
        const auto& cs = *rep.certificate;
        diag["majorant_radius"] = cs.majorant_radius ? Json(cs.majorant_radius->str()) : Json(nullptr);
        Json chk;
        chk["pass"] = cs.check.pass;
        chk["first_violation"] = cs.check.first_violation ? Json(*cs.check.first_violation) : Json(nullptr);
        diag["majorant_check"] = chk;
    } else {
        diag["majorant_radius"] = nullptr;
        diag["majorant_check"] = nullptr;
    }
    j["diagnostics"] = diag;
    return j;
}

std::string to_csv(const Report& rep) {
    std::ostringstream os;
    os << "j,c_j,C_j,|c_j|<=C_j\n";
    for (std::size_t j = 0; j < rep.psi.size(); ++j) {
        os << j + 1 << ',' << rep.psi[j].str() << ',';
        if (rep.certificate) {
            const Rational& C = rep.certificate->C[j];
            os << C.str() << ',' << (rep.psi[j].abs() <= C ? "true" : "false");
        } else {
            os << ',';
        }
        os << '\n';
    }
    return os.str();
}

// rows from the top valuation down to 0, columns i = 0..n;
// 'o' marks a boundary point, '.' any other (i, ord a_i)
std::string polygon_sketch(const Report& rep) {
    constexpr long kMaxRows = 16;
    long top = 0;
    for (std::size_t i = 0; i < rep.linearized.size(); ++i)
        if (rep.linearized[i].valuation) top = std::max(top, static_cast<long>(*rep.linearized[i].valuation));
    top = std::min(top, kMaxRows);
    std::ostringstream os;
    for (long y = top; y >= 0; --y) {
        char label[32];
        std::snprintf(label, sizeof label, "%3ld |", y);
        os << label;
        for (std::size_t i = 0; i < rep.linearized.size(); ++i) {
            char c = ' ';
            const auto& v = rep.linearized[i].valuation;
            if (v && static_cast<long>(*v) == y) {
                c = '.';
                for (const auto& p : rep.polygon.vertices)
                    if (p.x == static_cast<long>(i) && p.y == y) c = 'o';
            }
            os << ' ' << c;
        }
        os << '\n';
    }
    os << "    +";
    for (std::size_t i = 0; i < rep.linearized.size(); ++i) os << "--";
    os << "\n     ";
    for (std::size_t i = 0; i < rep.linearized.size(); ++i) os << ' ' << i % 10;
    os << "  (i, ord a_i)\n";
    return os.str();
}

std::string join(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
    return out;
}

std::string to_text(const Report& rep) {
    std::ostringstream os;
    os << "equation   F = " << rep.input.equation << "   (order " << rep.input.order << ")\n";
    os << "prefix     " << join(rep.input.prefix) << "\n";
    os << "mode       " << to_string(rep.input.mode) << ", " << rep.terms << " terms\n\n";
    os << "Newton polygon of the linearized operator\n" << polygon_sketch(rep);
    os << "slopes     {" << join(rep.slopes) << "}\n";
    os << "class      " << (rep.fuchsian ? "fuchsian" : "irregular") << "\n";
    os << "gevrey     {" << join(rep.gevrey.orders) << "}";
    if (rep.gevrey.gevrey_bound) os << ", gevrey bound " << rep.gevrey.gevrey_bound->str();
    os << "\n";
    if (rep.reduction) {
        const auto& r = *rep.reduction;
        os << "\nreduction  l = " << r.l << ", k0 = " << r.k0 << ", k = " << r.k << "\n";
        os << "Lbar(xi)   " << r.Lbar.str("xi") << "\n";
        os << "M          " << r.M.str() << "\n";
    }
    if (!rep.psi.empty()) {
        os << "\ncoefficients of psi (" << rep.psi.size() << ", first "
           << std::min<std::size_t>(rep.psi.size(), 8) << " shown)\n";
        for (std::size_t j = 0; j < std::min<std::size_t>(rep.psi.size(), 8); ++j)
            os << "  c_" << j + 1 << " = " << rep.psi[j].str() << "\n";
        os << "engines agree through j = " << rep.oracle_checked << "\n";
    }
    if (rep.residual) os << "residual order " << rep.residual->str() << "\n";
    os << "\ncertificate " << rep.certificate_status << "\n";
    if (rep.certificate) {
        const auto& cs = *rep.certificate;
        os << "  sigma  " << cs.sigma.sigma.str() << "\n";
        os << "  r      " << cs.best.r.str() << "\n";
        os << "  rho    " << cs.best.rho.str() << "\n";
        os << "  mu     " << cs.best.mu.str() << "\n";
        os << "  R      " << cs.best.R.str() << " ~ " << cs.best.R.to_decimal(12) << "\n";
        os << "  majorant check " << (cs.check.pass ? "pass" : "FAIL");
        if (cs.check.first_violation) os << " at j = " << *cs.check.first_violation;
        os << "\n";
    }
    if (rep.growth) {
        os << "\nempirical radius " << rep.growth->empirical_radius.str();
        if (rep.growth->gevrey_estimate) os << ", gevrey fit " << six_digits(*rep.growth->gevrey_estimate);
        os << " over [" << rep.growth->window.j_min << ", " << rep.growth->window.j_max << "]\n";
    }
    return os.str();
}

}  // namespace

Report run(const ProblemFile& pf, const RunOptions& options) {
    Report rep;
    rep.input = pf;
    rep.terms = options.terms.value_or(pf.terms);
    const Problem problem{pf.F, pf.prefix, rep.terms};
    problem.validate();

    const std::size_t n = pf.order;
    const DeltaOp op = linearized_operator(pf.F, pf.prefix, pf.prefix.size());
    rep.op_trunc = op.trunc();
    for (const auto& a : op.coeffs()) {
        OperatorTerm t;
        t.valuation = a.valuation();
        if (t.valuation) t.leading = a[*t.valuation];
        rep.linearized.push_back(t);
    }
    rep.polygon = build_polygon(op);
    rep.slopes = slopes(rep.polygon);
    rep.fuchsian = fuchsian_test_delta(op);
    rep.gevrey = gevrey_candidates(rep.slopes);
    rep.certificate_status = rep.fuchsian ? "not requested" : kIrregular;

    if (!rep.fuchsian && options.require_certificate)
        throw Error(ErrorKind::hypothesis_violation,
                    "the singular point is irregular (slopes {" + join(rep.slopes) +
                        "}); no convergence certificate exists",
                    static_cast<long>(*first_fuchsian_violation(op)));
    if (pf.mode == Mode::polygon_only) return rep;

    rep.reduction = rep.fuchsian ? reduce(pf.F, pf.prefix) : reduce_formal(pf.F, pf.prefix);
    if (rep.reduction->order() != n)
        throw Error(ErrorKind::internal_consistency, "reduced equation has the wrong order");
    solve_section(rep, pf.F, *rep.reduction, options.oracle_depth);

    if (rep.fuchsian && pf.mode == Mode::full)
        certificate_section(rep, *rep.reduction, options.grid.value_or(pf.grid()));
    return rep;
}

std::string emit(const Report& report, Format format) {
    switch (format) {
        case Format::json: return to_json(report).dump(2) + "\n";
        case Format::csv: return to_csv(report);
        case Format::text: return to_text(report);
    }
    return {};
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return 2;
        case ErrorKind::hypothesis_violation: return 3;
        case ErrorKind::resonance: return 4;
        case ErrorKind::insufficient_precision: return 5;
        case ErrorKind::internal_consistency: return 6;
        case ErrorKind::prefix_inconsistent: return 7;
        case ErrorKind::no_formal_solution: return 8;
        case ErrorKind::numeric_failure: return 9;
        case ErrorKind::insufficient_data: return 10;
        case ErrorKind::invalid_argument: return 1;
    }
    return 1;
}

}  // namespace fpsr

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fpsr/errors.hpp"
#include "fpsr/problem.hpp"
#include "fpsr/report.hpp"
#include "random_problems.hpp"

using namespace fpsr;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in, "cannot open " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data(const std::string& name) { return std::string(FPSR_TEST_DIR) + "/data/" + name; }

ParseError parse_error_of(std::string_view text) {
    try {
        parse_problem(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no parse error for " << text);
    return ParseError(ParseErrorCode::syntax, "", 0, 0, "");
}

struct Outcome {
    int status = -1;
    std::string out;
};

Outcome cli(const std::string& args) {
    const std::string cmd = std::string(FPSR_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    Outcome o;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) o.out.append(buf, got);
    const int raw = pclose(pipe);
    o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return o;
}

// Draft 2020-12 subset used by docs/report.schema.json: type, enum, pattern,
// minimum, properties, required, additionalProperties, items, minItems,
// maxItems, oneOf and local $ref.
class SchemaValidator {
public:
    explicit SchemaValidator(json root) : root_(std::move(root)) {}

    std::vector<std::string> errors(const json& doc) const {
        std::vector<std::string> out;
        check(root_, doc, "$", out);
        return out;
    }

private:
    const json& resolve(const json& s) const {
        if (!s.contains("$ref")) return s;
        const std::string ref = s["$ref"];
        return root_.at(json::json_pointer(ref.substr(1)));
    }

    static bool has_type(const json& v, const std::string& t) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "integer") return v.is_number_integer();
        if (t == "number") return v.is_number();
        if (t == "boolean") return v.is_boolean();
        if (t == "null") return v.is_null();
        return false;
    }

    void check(const json& schema, const json& v, const std::string& at, std::vector<std::string>& out) const {
        const json& s = resolve(schema);
        if (s.contains("oneOf")) {
            int matches = 0;
            for (const json& alt : s["oneOf"]) {
                std::vector<std::string> sub;
                check(alt, v, at, sub);
                matches += sub.empty();
            }
            if (matches != 1) out.push_back(at + ": " + std::to_string(matches) + " oneOf branches match");
        }
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_array()) {
                for (const json& t : s["type"]) ok = ok || has_type(v, t);
            } else {
                ok = has_type(v, s["type"]);
            }
            if (!ok) {
                out.push_back(at + ": expected " + s["type"].dump());
                return;
            }
        }
        if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
            out.push_back(at + ": not in enum");
        if (s.contains("pattern") && v.is_string() &&
            !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
            out.push_back(at + ": " + v.get<std::string>() + " does not match pattern");
        if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
            out.push_back(at + ": below minimum");
        if (v.is_object()) {
            for (const json& key : s.value("required", json::array()))
                if (!v.contains(key.get<std::string>())) out.push_back(at + ": missing " + key.get<std::string>());
            const json props = s.value("properties", json::object());
            for (const auto& [key, value] : v.items()) {
                if (props.contains(key))
                    check(props[key], value, at + "." + key, out);
                else if (s.contains("additionalProperties") && s["additionalProperties"] == false)
                    out.push_back(at + ": unexpected " + key);
            }
        }
        if (v.is_array()) {
            if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) out.push_back(at + ": too short");
            if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) out.push_back(at + ": too long");
            if (s.contains("items"))
                for (std::size_t i = 0; i < v.size(); ++i)
                    check(s["items"], v[i], at + "[" + std::to_string(i) + "]", out);
        }
    }

    json root_;
};

const SchemaValidator& schema() {
    static const SchemaValidator v(json::parse(slurp(std::string(FPSR_SOURCE_DIR) + "/docs/report.schema.json")));
    return v;
}

}  // namespace

TEST_CASE("problem files") {
    const ProblemFile a = parse_problem("order=1  F=\"u1 - u0^2 - z\"  prefix=[\"1\"]  terms=100");
    CHECK(a.order == 1);
    CHECK(a.F == parse_equation("u1 - u0^2 - z", 1));
    CHECK(a.prefix == std::vector<Rational>{1});
    CHECK(a.terms == 100);
    CHECK(a.mode == Mode::full);

    const ProblemFile e = parse_problem("order=1  F=\"z*u1 + u0 - z\"  prefix=[\"1\"]  terms=50");
    CHECK(e.terms == 50);
    CHECK_THROWS_AS(run(e, RunOptions{.require_certificate = true}), Error);

    const ProblemFile lined = parse_problem(slurp(data("small.fpsr")));
    CHECK(lined.terms == 8);
    REQUIRE(lined.grid_rho);
    CHECK(*lined.grid_rho == std::vector<Rational>{Rational(1, 2), 1, 2});
    CHECK(lined.grid().r == std::vector<Rational>{1, 10, 100});

    CHECK(parse_problem("order = 2\nF = \"u2\"\nprefix = [\"1\", \"-3/4\"]\nmode = \"polygon-only\"").mode ==
          Mode::polygon_only);
    CHECK(parse_problem("order=0 F=\"u0 - z\" prefix=[\"1\"]").terms == 50);
    CHECK(parse_problem("order=1 F=\"u1 - 1/2*z + 0.25*z^2\" prefix=[\"1\"]").F ==
          parse_equation("y1 - z/2 + z^2/4", 1));
}

TEST_CASE("problem file errors") {
    ParseError e = parse_error_of("order=1  F=\"u2\"");
    CHECK(e.code() == ParseErrorCode::order_mismatch);
    CHECK(e.token() == "u2");
    CHECK(e.line() == 1);
    CHECK(e.column() == 13);

    e = parse_error_of("order=1\nF=\"u1 - w\"\nprefix=[\"1\"]");
    CHECK(e.code() == ParseErrorCode::unknown_identifier);
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
    CHECK(e.token() == "w");

    e = parse_error_of("order=1 F=\"u1^-2\" prefix=[\"1\"]");
    CHECK(e.code() == ParseErrorCode::bad_exponent);
    e = parse_error_of("order=1 F=\"u1^(1/2)\" prefix=[\"1\"]");
    CHECK(e.code() == ParseErrorCode::bad_exponent);

    e = parse_error_of("order=1 F=\"u1 - * z\" prefix=[\"1\"]");
    CHECK(e.code() == ParseErrorCode::syntax);
    CHECK(e.token() == "*");

    CHECK(parse_error_of("order=1 F=\"u1 / u0\" prefix=[\"1\"]").code() == ParseErrorCode::syntax);
    CHECK(parse_error_of("order=1 F=\"u1\"").code() == ParseErrorCode::missing_key);
    CHECK(parse_error_of("F=\"u1\" prefix=[\"1\"]").code() == ParseErrorCode::missing_key);
    CHECK(parse_error_of("order=1 F=\"u1\" prefix=[]").code() == ParseErrorCode::invalid_value);
    CHECK(parse_error_of("order=1 F=\"u1\" prefix=[\"1\"] colour=\"red\"").code() ==
          ParseErrorCode::unknown_identifier);
    CHECK(parse_error_of("order=1 order=1 F=\"u1\" prefix=[\"1\"]").code() == ParseErrorCode::syntax);
    CHECK(parse_error_of("order=1 F=\"u1\" prefix=[\"1\"] mode=\"fast\"").code() == ParseErrorCode::invalid_value);
    CHECK(parse_error_of("order=1 F=\"u1\" prefix=[\"1\"] rho=[\"-1\"]").code() == ParseErrorCode::invalid_value);
}

TEST_CASE("equation text round-trips") {
    testing::ProblemGenerator gen(3);
    for (int t = 0; t < 30; ++t) {
        const auto rp = gen.next();
        CHECK(parse_equation(rp.F.str(), rp.n) == rp.F);
    }
    const MPoly M = parse_equation("1 + 2*y0 + y0^2", 1);
    CHECK(M.str() == "1 + 2 * y0^1 + 1 * y0^2");
    CHECK(parse_equation(M.str(), 1) == M);
}

TEST_CASE("grid option") {
    const PolydiskGrid g = parse_grid("r=1,10;rho=1/2,1,2");
    CHECK(g.r == std::vector<Rational>{1, 10});
    CHECK(g.rho == std::vector<Rational>{Rational(1, 2), 1, 2});
    CHECK(parse_grid("rho=3").r == PolydiskGrid::default_grid().r);
    CHECK_THROWS_AS(parse_grid("r=0"), Error);
    CHECK_THROWS_AS(parse_grid("radius=1"), Error);
}

TEST_CASE("pipeline examples") {
    SUBCASE("Riccati example") {
        const Report rep = run(parse_problem(slurp(data("riccati.fpsr"))));
        REQUIRE(rep.reduction);
        CHECK(rep.reduction->k == 1);
        REQUIRE(rep.certificate);
        CHECK(rep.certificate->best.R > Rational(35, 1000));
        CHECK(rep.certificate->best.R < Rational(1, 27));
        CHECK(rep.certificate->check.pass);
        CHECK(rep.psi.size() == 500);
        CHECK(rep.residual->value >= 1 + 500 + 1);
    }
    SUBCASE("Euler example") {
        const Report rep = run(parse_problem(slurp(data("euler.fpsr"))));
        CHECK_FALSE(rep.fuchsian);
        CHECK(rep.slopes == std::vector<Rational>{1});
        CHECK(rep.gevrey.orders == std::vector<Rational>{0, 1});
        CHECK(rep.certificate_status == "not applicable (irregular singular point)");
        REQUIRE(rep.growth);
        REQUIRE(rep.growth->gevrey_estimate);
        CHECK(std::abs(*rep.growth->gevrey_estimate - 1.0) <= 0.05);
    }
    SUBCASE("polynomial solution") {
        const Report rep = run(parse_problem(slurp(data("linear.fpsr"))));
        CHECK(rep.phi.front() == Rational(1, 2));
        CHECK(std::all_of(rep.psi.begin(), rep.psi.end(), [](const Rational& c) { return c.is_zero(); }));
        CHECK(rep.residual->str() == ">= 12");
        CHECK(rep.certificate->best.R == PolydiskGrid::default_grid().r.back());
    }
    SUBCASE("overrides") {
        RunOptions o;
        o.terms = 3;
        o.grid = PolydiskGrid{{1}, {1}};
        const Report rep = run(parse_problem(slurp(data("riccati.fpsr"))), o);
        CHECK(rep.psi == std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(11, 48)});
        CHECK(rep.certificate->best.R == Rational(1, 28));
        CHECK(rep.certificate->C == std::vector<Rational>{1, 1, Rational(5, 3)});
    }
    SUBCASE("solve-only mode skips the certificate") {
        ProblemFile pf = parse_problem(slurp(data("small.fpsr")));
        pf.mode = Mode::solve_only;
        const Report rep = run(pf);
        CHECK(rep.certificate_status == "not requested");
        CHECK_FALSE(rep.certificate);
        CHECK(rep.psi.size() == 8);
    }
}

TEST_CASE("emitted formats") {
    const Report small = run(parse_problem(slurp(data("small.fpsr"))));
    const std::string csv = emit(small, Format::csv);
    CHECK(csv.rfind("j,c_j,C_j,|c_j|<=C_j\n1,1/2,1,true\n", 0) == 0);

    RunOptions none;
    none.terms = 0;
    CHECK(emit(run(parse_problem(slurp(data("small.fpsr"))), none), Format::csv) == "j,c_j,C_j,|c_j|<=C_j\n");

    const std::string j1 = emit(small, Format::json);
    CHECK(j1 == emit(run(parse_problem(slurp(data("small.fpsr")))), Format::json));
    const json doc = json::parse(j1);
    CHECK(doc["majorant"]["certificate"]["R"] == "100/2701");
    CHECK(doc["coefficients"]["psi"][2] == "11/48");

    const std::string text = emit(small, Format::text);
    CHECK(text.find("Newton polygon") != std::string::npos);
}

TEST_CASE("reports satisfy the schema") {
    for (const char* name : {"small.fpsr", "euler.fpsr", "linear.fpsr", "polygon.fpsr"}) {
        CAPTURE(name);
        const json doc = json::parse(emit(run(parse_problem(slurp(data(name)))), Format::json));
        CHECK(schema().errors(doc).empty());
    }
    testing::ProblemGenerator gen(71);
    for (int t = 0; t < 5; ++t) {
        const auto rp = gen.next();
        ProblemFile pf;
        pf.order = rp.n;
        pf.equation = rp.F.str();
        pf.F = rp.F;
        pf.prefix = rp.prefix;
        pf.terms = 20;
        const json doc = json::parse(emit(run(pf), Format::json));
        const auto errs = schema().errors(doc);
        CHECK_MESSAGE(errs.empty(), (errs.empty() ? "" : errs.front()));
    }

    // the validator itself rejects broken documents
    json broken = json::parse(emit(run(parse_problem(slurp(data("linear.fpsr")))), Format::json));
    broken["coefficients"]["psi"][0] = "1/0";
    broken["extra"] = 1;
    broken["input"].erase("order");
    CHECK(schema().errors(broken).size() == 3);
}

TEST_CASE("golden reports") {
    for (const char* name : {"small", "euler", "linear", "polygon"}) {
        const Report rep = run(parse_problem(slurp(data(std::string(name) + ".fpsr"))));
        for (auto [fmt, ext] : {std::pair{Format::json, "json"}, {Format::csv, "csv"}, {Format::text, "text"}}) {
            const std::string golden = std::string(FPSR_TEST_DIR) + "/golden/" + name + "." + ext;
            CAPTURE(golden);
            CHECK(emit(rep, fmt) == slurp(golden));
        }
    }
}

TEST_CASE("command line") {
    const Outcome ok = cli("-i " + data("small.fpsr"));
    CHECK(ok.status == 0);
    CHECK(ok.out == slurp(std::string(FPSR_TEST_DIR) + "/golden/small.json"));

    CHECK(cli("-i " + data("small.fpsr") + " -f csv --terms 1").out == "j,c_j,C_j,|c_j|<=C_j\n1,1/2,1,true\n");
    CHECK(cli("-i " + data("euler.fpsr")).status == 0);
    CHECK(cli("-i " + data("euler.fpsr") + " --require-certificate").status == 3);
    CHECK(cli("-i - < " + data("linear.fpsr")).status == 0);
    CHECK(cli("-i /nonexistent/problem").status == 1);
    CHECK(cli("-i " + data("small.fpsr") + " -f yaml").status == 1);
    CHECK(cli("-i " + data("small.fpsr") + " --grid r=0").status == 2);

    auto inline_problem = [](const std::string& text) {
        const auto path = std::filesystem::temp_directory_path() / "fpsr_test_cli.fpsr";
        std::ofstream(path) << text << "\n";
        return cli("-i " + path.string()).status;
    };
    CHECK(inline_problem("order=1 F=\"u2\"") == 2);
    CHECK(inline_problem("order=1 F=\"u1 - 2*u0 - z\" prefix=[\"-1\"]") == 4);
    CHECK(inline_problem("order=1 F=\"z*u1 - z*u0 - z^2\" prefix=[\"1\"]") == 5);
    CHECK(inline_problem("order=1 F=\"u1 - u0^2 - z\" prefix=[\"3\"]") == 7);
}

TEST_CASE("exit codes") {
    CHECK(exit_code(ErrorKind::parse) == 2);
    CHECK(exit_code(ErrorKind::hypothesis_violation) == 3);
    CHECK(exit_code(ErrorKind::resonance) == 4);
    CHECK(exit_code(ErrorKind::insufficient_precision) == 5);
    CHECK(exit_code(ErrorKind::internal_consistency) == 6);
    CHECK(exit_code(ErrorKind::prefix_inconsistent) == 7);
    CHECK(exit_code(ErrorKind::no_formal_solution) == 8);
    CHECK(exit_code(ErrorKind::numeric_failure) == 9);
    CHECK(exit_code(ErrorKind::insufficient_data) == 10);
    CHECK(exit_code(ErrorKind::invalid_argument) == 1);
}

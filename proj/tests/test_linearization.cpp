#include <doctest.h>

#include "fpsr/errors.hpp"
#include "fpsr/linearization.hpp"
#include "fpsr/problem.hpp"
#include "fpsr/reduction.hpp"
#include "random_problems.hpp"

using namespace fpsr;

namespace {

USeries series(std::vector<Rational> c) { return USeries(std::move(c)); }

DeltaOp op(std::vector<std::vector<Rational>> polys, std::size_t trunc) {
    std::vector<USeries> a;
    for (const auto& p : polys) a.push_back(USeries::polynomial(p, trunc));
    return DeltaOp(std::move(a));
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::invalid_argument;
}

}  // namespace

TEST_CASE("jet") {
    const std::vector<Rational> p1{1, Rational(1, 2)};
    auto j = jet(p1, 1, 2);
    REQUIRE(j.size() == 2);
    CHECK(j[0] == series({0, 1, Rational(1, 2)}));
    CHECK(j[1] == series({0, 1, 1}));

    const std::vector<Rational> p2{-1};
    j = jet(p2, 1, 1);
    CHECK(j[0] == series({0, -1}));
    CHECK(j[1] == series({0, -1}));

    const std::vector<Rational> p3{1, 0, 2};
    j = jet(p3, 2, 3);
    CHECK(j[0] == series({0, 1, 0, 2}));
    CHECK(j[1] == series({0, 1, 0, 6}));
    CHECK(j[2] == series({0, 1, 0, 18}));

    CHECK(kind_of([&] { jet(p2, 1, 2); }) == ErrorKind::insufficient_precision);
}

TEST_CASE("jet commutes with delta") {
    testing::ProblemGenerator gen(99);
    for (int t = 0; t < 30; ++t) {
        std::vector<Rational> prefix;
        for (int i = 0; i < 6; ++i) prefix.push_back(Rational(gen.integer(-9, 9), gen.integer(1, 5)));
        const auto j = jet(prefix, 4, 6);
        for (std::size_t i = 0; i + 1 < j.size(); ++i) CHECK(j[i + 1] == delta(j[i], 1));
    }
}

TEST_CASE("linearized operator") {
    const MPoly A = parse_equation("u1 - u0^2 - z", 1);
    const std::vector<Rational> pa{1, Rational(1, 2)};
    DeltaOp L = linearized_operator(A, pa, 2);
    CHECK(L[1] == series({1, 0, 0}));
    CHECK(L[0] == series({0, -2, -1}));

    const std::vector<Rational> half{Rational(1, 2)};
    L = linearized_operator(parse_equation("u1 + u0 - z", 1), half, 1);
    CHECK(L[1] == series({1, 0}));
    CHECK(L[0] == series({1, 0}));

    const std::vector<Rational> one{1};
    L = linearized_operator(parse_equation("z*u1 + u0 - z", 1), one, 1);
    CHECK(L[1] == series({0, 1}));
    CHECK(L[0] == series({1, 0}));
}

TEST_CASE("leading data") {
    LeadingData d = leading_data(op({{0, -2, -1}, {1}}, 2));
    CHECK(d.l == 0);
    CHECK(d.b == std::vector<Rational>{0, 1});

    d = leading_data(op({{0, 2}, {0, 1, 1}}, 2));
    CHECK(d.l == 1);
    CHECK(d.b == std::vector<Rational>{2, 1});

    try {
        leading_data(op({{1}, {0, 1}}, 2));
        FAIL("expected a hypothesis violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::hypothesis_violation);
        CHECK(e.index() == 0);
    }

    // l = 1 = T: a smaller term could still be missing from a longer prefix
    CHECK(kind_of([] { leading_data(op({{0, 2}, {0, 1}}, 1)); }) == ErrorKind::insufficient_precision);
}

TEST_CASE("lowest-order data at an irregular point") {
    const LeadingData d = lowest_order_data(op({{1}, {0, 1}}, 2));
    CHECK(d.l == 0);
    CHECK(d.b == std::vector<Rational>{1, 0});
    const LeadingData f = lowest_order_data(op({{0, 2}, {0, 1, 1}}, 2));
    CHECK(f.l == 1);
    CHECK(f.b == std::vector<Rational>{2, 1});
}

TEST_CASE("prefix validation") {
    const MPoly A = parse_equation("u1 - u0^2 - z", 1);
    const std::vector<Rational> good{1, Rational(1, 2), Rational(1, 3)};
    CHECK_NOTHROW(validate_prefix(A, good, 0));
    const std::vector<Rational> bad{2};
    CHECK(kind_of([&] { validate_prefix(A, bad, 0); }) == ErrorKind::prefix_inconsistent);
    const std::vector<Rational> bad_late{1, Rational(1, 2), Rational(1, 4)};
    CHECK(kind_of([&] { validate_prefix(A, bad_late, 0); }) == ErrorKind::prefix_inconsistent);
}

TEST_CASE("leading data on random fuchsian problems") {
    testing::ProblemGenerator gen(17);
    for (int t = 0; t < 40; ++t) {
        const auto rp = gen.next();
        CAPTURE(rp.F.str());
        const std::size_t n = rp.n;
        // the generator builds F with these leading data
        const auto longer = extend_prefix(rp.F, rp.prefix, rp.l + 4);
        for (std::size_t T = rp.l + 1; T <= longer.size(); ++T) {
            const DeltaOp L = linearized_operator(rp.F, std::span(longer).first(T), T);
            const LeadingData d = leading_data(L);
            CHECK(d.l == rp.l);
            CHECK(d.b == rp.b);
            for (std::size_t i = 0; i <= n; ++i) {
                const USeries rest = L[i] - USeries::monomial(d.b[i], d.l, L.trunc());
                const auto v = rest.valuation();
                CHECK((!v || *v >= d.l + 1));
            }
        }
    }
}

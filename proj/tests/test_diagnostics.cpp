#include <doctest.h>

#include <cmath>
#include <vector>

#include "fpsr/diagnostics.hpp"
#include "fpsr/errors.hpp"

using namespace fpsr;

namespace {

std::vector<Rational> catalan(std::size_t J) {
    std::vector<Rational> c;
    for (std::size_t j = 1; j <= J; ++j)
        c.push_back(binomial(static_cast<unsigned>(2 * j), static_cast<unsigned>(j)) /
                    Rational(static_cast<long>(j) + 1));
    return c;
}

std::vector<Rational> powers_of_two(std::size_t J) {
    std::vector<Rational> c;
    for (std::size_t j = 1; j <= J; ++j) c.push_back(Rational(2).pow(static_cast<unsigned>(j)));
    return c;
}

// (-1)^(j-1) (j-1)!
std::vector<Rational> euler(std::size_t J) {
    std::vector<Rational> c;
    Rational f = 1;
    for (std::size_t j = 1; j <= J; ++j) {
        c.push_back(j % 2 == 1 ? f : -f);
        f *= Rational(static_cast<long>(j));
    }
    return c;
}

std::vector<Rational> factorial_squared(std::size_t J) {
    std::vector<Rational> c;
    Rational f = 1;
    for (std::size_t j = 1; j <= J; ++j) {
        f *= Rational(static_cast<long>(j));
        c.push_back(f * f);
    }
    return c;
}

}  // namespace

TEST_CASE("window") {
    CHECK(Window::upper_half(100).j_min == 50);
    CHECK(Window::upper_half(100).j_max == 100);
    CHECK(Window::upper_half(3).j_min == 2);
}

TEST_CASE("empirical radius") {
    const auto cat = empirical_radius(catalan(200), Window{100, 200});
    CHECK(cat.kind == RadiusEstimate::Kind::finite);
    CHECK(cat.value == doctest::Approx(0.25).epsilon(0.1));

    const auto geo = empirical_radius(powers_of_two(100), Window{50, 100});
    CHECK(geo.value == doctest::Approx(0.5).epsilon(0.1));
    CHECK(geo.str() == "0.5");

    const auto eu = empirical_radius(euler(80), Window{10, 80});
    CHECK(eu.kind == RadiusEstimate::Kind::zero);
    CHECK(eu.str() == "zero");

    const auto none = empirical_radius(std::vector<Rational>(20), Window{2, 20});
    CHECK(none.kind == RadiusEstimate::Kind::infinite);
    CHECK(none.str() == "infinite");

    // sparse coefficients: only even j nonzero
    std::vector<Rational> sparse = powers_of_two(100);
    for (std::size_t j = 1; j <= 100; j += 2) sparse[j - 1] = 0;
    CHECK(empirical_radius(sparse, Window{50, 100}).value == doctest::Approx(0.5).epsilon(0.1));

    CHECK_THROWS_AS(empirical_radius(catalan(10), Window{2, 11}), Error);
    CHECK_THROWS_AS(empirical_radius(catalan(10), Window{1, 10}), Error);
}

TEST_CASE("gevrey fit") {
    CHECK(std::abs(gevrey_fit(euler(80), Window{10, 80}) - 1.0) <= 0.05);
    CHECK(std::abs(gevrey_fit(powers_of_two(80), Window{10, 80})) <= 0.05);
    CHECK(std::abs(gevrey_fit(catalan(80), Window{10, 80})) <= 0.05);
    CHECK(std::abs(gevrey_fit(factorial_squared(80), Window{10, 80}) - 2.0) <= 0.1);

    try {
        gevrey_fit(std::vector<Rational>(30, Rational(0)), Window{2, 30});
        FAIL("expected insufficient data");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::insufficient_data);
    }
    CHECK_THROWS_AS(gevrey_fit(euler(9), Window{2, 9}), Error);
}

TEST_CASE("majorant report") {
    const std::vector<Rational> c{Rational(1, 2), Rational(1, 3), Rational(11, 48)};
    const std::vector<Rational> C{1, 1, Rational(5, 3)};
    CHECK(majorant_report(c, C).pass);
    CHECK_FALSE(majorant_report(c, C).first_violation);

    const auto fail = majorant_report(std::vector<Rational>{2}, std::vector<Rational>{1});
    CHECK_FALSE(fail.pass);
    CHECK(fail.first_violation == 1);

    CHECK(majorant_report(std::vector<Rational>{}, std::vector<Rational>{}).pass);

    // absolute values are compared, equality passes
    const auto mixed = majorant_report(std::vector<Rational>{-1, Rational(-7, 2), 4},
                                       std::vector<Rational>{1, 3, 3});
    CHECK(mixed.first_violation == 2);

    CHECK_THROWS_AS(majorant_report(c, std::vector<Rational>{1}), Error);
}

TEST_CASE("growth report") {
    const auto g = growth_report(euler(80), Window::upper_half(80));
    CHECK(g.empirical_radius.str() == "zero");
    REQUIRE(g.gevrey_estimate);
    CHECK(std::abs(*g.gevrey_estimate - 1.0) <= 0.05);
    CHECK(g.window.j_min == 40);

    // too few nonzero coefficients leaves the fit out
    std::vector<Rational> short_run(12);
    short_run[0] = 1;
    const auto s = growth_report(short_run, Window::upper_half(12));
    CHECK_FALSE(s.gevrey_estimate);
    CHECK(s.empirical_radius.str() == "infinite");
}

#include "fpsr/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include <Eigen/Dense>

#include "fpsr/errors.hpp"

namespace fpsr {

namespace {

constexpr std::size_t kMinFitPoints = 10;
constexpr double kDivergentGevrey = 0.5;

void check_window(std::span<const Rational> c, Window w) {
    if (w.j_min < 2 || w.j_min > w.j_max || w.j_max > c.size())
        throw Error(ErrorKind::invalid_argument,
                    "window (" + std::to_string(w.j_min) + ", " + std::to_string(w.j_max) +
                        ") does not fit " + std::to_string(c.size()) + " coefficients");
}

}  // namespace

Window Window::upper_half(std::size_t J) { return {std::max<std::size_t>(2, J / 2), J}; }

std::string RadiusEstimate::str() const {
    switch (kind) {
        case Kind::zero: return "zero";
        case Kind::infinite: return "infinite";
        case Kind::finite: break;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

double gevrey_fit(std::span<const Rational> c, Window w) {
    check_window(c, w);
    std::vector<std::size_t> js;
    for (std::size_t j = w.j_min; j <= w.j_max; ++j)
        if (!c[j - 1].is_zero()) js.push_back(j);
    if (js.size() < kMinFitPoints)
        throw Error(ErrorKind::insufficient_data, "gevrey_fit needs at least 10 nonzero coefficients in the window, got " +
                                                      std::to_string(js.size()));

    Eigen::MatrixXd X(static_cast<Eigen::Index>(js.size()), 4);
    Eigen::VectorXd y(static_cast<Eigen::Index>(js.size()));
    for (std::size_t r = 0; r < js.size(); ++r) {
        const auto j = static_cast<double>(js[r]);
        const auto row = static_cast<Eigen::Index>(r);
        X(row, 0) = std::lgamma(j + 1.0);
        X(row, 1) = j;
        X(row, 2) = std::log(j);
        X(row, 3) = 1.0;
        y(row) = c[js[r] - 1].log_abs();
    }
    const Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
    return beta(0);
}

RadiusEstimate empirical_radius(std::span<const Rational> c, Window w) {
    check_window(c, w);
    std::vector<double> roots;
    for (std::size_t j = w.j_min; j <= w.j_max; ++j)
        if (!c[j - 1].is_zero()) roots.push_back(std::exp(-c[j - 1].log_abs() / static_cast<double>(j)));
    if (roots.empty()) return {RadiusEstimate::Kind::infinite, 0.0};
    if (roots.size() >= kMinFitPoints && gevrey_fit(c, w) > kDivergentGevrey) return {RadiusEstimate::Kind::zero, 0.0};

    std::sort(roots.begin(), roots.end());
    const std::size_t mid = roots.size() / 2;
    const double median = roots.size() % 2 == 1 ? roots[mid] : 0.5 * (roots[mid - 1] + roots[mid]);
    return {RadiusEstimate::Kind::finite, median};
}

MajorantCheck majorant_report(std::span<const Rational> c, std::span<const Rational> C) {
    if (c.size() != C.size()) throw Error(ErrorKind::invalid_argument, "majorant_report: sequences differ in length");
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j].abs() > C[j]) return {false, j + 1};
    return {};
}

GrowthReport growth_report(std::span<const Rational> c, Window w) {
    GrowthReport out;
    out.window = w;
    out.empirical_radius = empirical_radius(c, w);
    try {
        out.gevrey_estimate = gevrey_fit(c, w);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::insufficient_data) throw;
    }
    return out;
}

}  // namespace fpsr

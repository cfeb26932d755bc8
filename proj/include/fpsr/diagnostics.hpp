#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "fpsr/rational.hpp"

namespace fpsr {

/// Closed range [j_min, j_max] of 1-based coefficient indices.
struct Window {
    std::size_t j_min = 2;
    std::size_t j_max = 2;

    /// (max(2, J/2), J), the upper half of a run of J coefficients.
    static Window upper_half(std::size_t J);
};

struct RadiusEstimate {
    enum class Kind { finite, zero, infinite };
    Kind kind = Kind::finite;
    double value = 0.0;

    /// Decimal with 6 significant digits, "zero" or "infinite".
    std::string str() const;
};

/// Root-test estimate 1 / limsup |c_j|^(1/j): the median of |c_j|^(-1/j) over
/// the nonzero coefficients of the window. "zero" when the fitted Gevrey
/// order exceeds 1/2, "infinite" when the window holds no nonzero coefficient.
/// `c[0]` is c_1.
RadiusEstimate empirical_radius(std::span<const Rational> c, Window w);

/// Least-squares fit of log|c_j| = s log(j!) + beta j + gamma log j + const
/// over the window; returns s. Needs at least 10 nonzero coefficients.
double gevrey_fit(std::span<const Rational> c, Window w);

struct MajorantCheck {
    bool pass = true;
    /// Smallest 1-based j with |c_j| > C_j.
    std::optional<std::size_t> first_violation;
};

/// |c_j| <= C_j for every j, compared exactly.
MajorantCheck majorant_report(std::span<const Rational> c, std::span<const Rational> C);

struct GrowthReport {
    RadiusEstimate empirical_radius;
    std::optional<double> gevrey_estimate;
    Window window;
};

GrowthReport growth_report(std::span<const Rational> c, Window w);

}  // namespace fpsr

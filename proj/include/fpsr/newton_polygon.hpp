#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fpsr/rational.hpp"
#include "fpsr/series.hpp"

namespace fpsr {

/// Linear operator a_n(z) delta^n + ... + a_0(z). All a_i share one
/// truncation and a_n is not zero through it.
class DeltaOp {
public:
    /// Throws insufficient_precision if a_n vanishes through the truncation,
    /// invalid_argument if the truncations differ or `a` is empty.
    explicit DeltaOp(std::vector<USeries> a);

    std::size_t order() const { return a_.size() - 1; }
    std::size_t trunc() const { return a_.front().trunc(); }
    const std::vector<USeries>& coeffs() const { return a_; }
    const USeries& operator[](std::size_t i) const { return a_[i]; }

private:
    std::vector<USeries> a_;
};

struct LatticePoint {
    long x = 0;
    long y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// A finite edge of positive slope between two hull vertices.
struct PolygonEdge {
    long x_from = 0;
    long x_to = 0;
    Rational slope;
};

/// Lower-left boundary of the Newton polygon. `vertices` lists every point
/// (i, ord a_i) lying on the boundary, by increasing x; `edges` omits the
/// horizontal and the vertical ray.
struct Polygon {
    std::vector<LatticePoint> vertices;
    std::vector<PolygonEdge> edges;
};

Polygon build_polygon(const DeltaOp& op);

/// Strictly increasing positive slopes r_1 < ... < r_m.
std::vector<Rational> slopes(const Polygon& p);

/// ord a_i >= ord a_n for i < n.
bool fuchsian_test_delta(const DeltaOp& op);

/// Fuchsian test for b_n u^(n) + ... + b_0 u: ord b_{n-i} + i >= ord b_n.
bool fuchsian_test_standard(std::span<const USeries> b);

/// First index i < n with ord a_i < ord a_n, if any.
std::optional<std::size_t> first_fuchsian_violation(const DeltaOp& op);

struct GevreyCandidates {
    /// {0} together with 1/r_i, ascending.
    std::vector<Rational> orders;
    /// 1/r_1 for an irregular point; absent when there are no slopes.
    std::optional<Rational> gevrey_bound;
};

GevreyCandidates gevrey_candidates(std::span<const Rational> slopes);

}  // namespace fpsr

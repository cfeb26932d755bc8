#include "fpsr/newton_polygon.hpp"

#include <algorithm>

#include "fpsr/errors.hpp"

namespace fpsr {

DeltaOp::DeltaOp(std::vector<USeries> a) : a_(std::move(a)) {
    if (a_.empty()) throw Error(ErrorKind::invalid_argument, "operator needs at least one coefficient");
    for (const auto& s : a_)
        if (s.trunc() != a_.front().trunc())
            throw Error(ErrorKind::invalid_argument, "operator coefficients must share one truncation");
    if (a_.back().is_zero_through_trunc())
        throw Error(ErrorKind::insufficient_precision,
                    "leading coefficient a_" + std::to_string(a_.size() - 1) + " vanishes through z^" +
                        std::to_string(trunc()),
                    static_cast<long>(a_.size() - 1));
}

namespace {

// z-cross product of (b - a) x (c - a)
long cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::vector<LatticePoint> support(const DeltaOp& op) {
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i <= op.order(); ++i)
        if (auto v = op[i].valuation()) pts.push_back({static_cast<long>(i), static_cast<long>(*v)});
    return pts;
}

}  // namespace

Polygon build_polygon(const DeltaOp& op) {
    const auto pts = support(op);
    long vmin = std::min_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.y < b.y; })->y;
    // rightmost point at the minimal height: end of the horizontal ray
    std::size_t start = 0;
    for (std::size_t t = 0; t < pts.size(); ++t)
        if (pts[t].y == vmin) start = t;

    std::vector<LatticePoint> hull;
    for (std::size_t t = start; t < pts.size(); ++t) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pts[t]) <= 0) hull.pop_back();
        hull.push_back(pts[t]);
    }

    Polygon poly;
    for (std::size_t t = 0; t < start; ++t)
        if (pts[t].y == vmin) poly.vertices.push_back(pts[t]);
    poly.vertices.push_back(hull.front());
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const auto& a = hull[e];
        const auto& b = hull[e + 1];
        for (const auto& p : pts)
            if (p.x > a.x && p.x < b.x && cross(a, b, p) == 0) poly.vertices.push_back(p);
        poly.vertices.push_back(b);
        poly.edges.push_back({a.x, b.x, Rational(b.y - a.y, b.x - a.x)});
    }
    return poly;
}

std::vector<Rational> slopes(const Polygon& p) {
    std::vector<Rational> out;
    for (const auto& e : p.edges)
        if (e.slope.sign() > 0) out.push_back(e.slope);
    return out;
}

std::optional<std::size_t> first_fuchsian_violation(const DeltaOp& op) {
    const std::size_t vn = *op[op.order()].valuation();
    for (std::size_t i = 0; i < op.order(); ++i) {
        auto v = op[i].valuation();
        if (v && *v < vn) return i;
    }
    return std::nullopt;
}

bool fuchsian_test_delta(const DeltaOp& op) { return !first_fuchsian_violation(op).has_value(); }

bool fuchsian_test_standard(std::span<const USeries> b) {
    if (b.empty()) throw Error(ErrorKind::invalid_argument, "empty operator");
    const std::size_t n = b.size() - 1;
    auto vn = b[n].valuation();
    if (!vn)
        throw Error(ErrorKind::insufficient_precision,
                    "valuation of b_" + std::to_string(n) + " is not determined", static_cast<long>(n));
    for (std::size_t i = 1; i <= n; ++i) {
        // a coefficient zero through its truncation T has ord >= T+1
        std::size_t v = b[n - i].valuation().value_or(b[n - i].trunc() + 1);
        if (v + i >= *vn) continue;
        if (!b[n - i].valuation())
            throw Error(ErrorKind::insufficient_precision,
                        "b_" + std::to_string(n - i) + " is not known far enough to decide",
                        static_cast<long>(n - i));
        return false;
    }
    return true;
}

GevreyCandidates gevrey_candidates(std::span<const Rational> slopes) {
    GevreyCandidates out;
    out.orders.push_back(Rational(0));
    for (auto it = slopes.rbegin(); it != slopes.rend(); ++it) {
        if (it->sign() <= 0) throw Error(ErrorKind::invalid_argument, "slopes must be positive");
        out.orders.push_back(it->inverse());
    }
    if (!std::is_sorted(out.orders.begin(), out.orders.end()) ||
        std::adjacent_find(out.orders.begin(), out.orders.end()) != out.orders.end())
        throw Error(ErrorKind::invalid_argument, "slopes must be strictly increasing");
    if (!slopes.empty()) out.gevrey_bound = slopes.front().inverse();
    return out;
}

}  // namespace fpsr

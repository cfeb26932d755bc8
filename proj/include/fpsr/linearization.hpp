#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fpsr/mpoly.hpp"
#include "fpsr/newton_polygon.hpp"
#include "fpsr/rational.hpp"
#include "fpsr/series.hpp"

namespace fpsr {

/// F(z, u, delta u, ..., delta^n u) = 0 together with the known start
/// c_1..c_P of a formal solution (c_0 = 0) and the number of tail
/// coefficients wanted.
struct Problem {
    MPoly F;
    std::vector<Rational> prefix;
    std::size_t terms = 0;

    std::size_t order() const { return F.order(); }
    /// Throws invalid_argument when F is zero or the prefix is empty.
    void validate() const;
};

/// Lowest-order data of the linearized operator: every a_i = b_i z^l + O(z^(l+1)).
struct LeadingData {
    std::size_t l = 0;
    std::vector<Rational> b;
};

/// delta^i of the prefix polynomial for i = 0..n, known through z^T (T <= P).
std::vector<USeries> jet(std::span<const Rational> prefix, std::size_t n, std::size_t T);

/// (phi, delta phi, ..., delta^n phi) with phi's own truncation.
std::vector<USeries> jet(const USeries& phi, std::size_t n);

/// a_i = dF/dy_i evaluated along the jet, known through z^T.
DeltaOp linearized_operator(const MPoly& F, std::span<const Rational> prefix, std::size_t T);

/// Leading data of a Fuchsian operator: l = ord a_n, b_i = [z^l] a_i.
/// Throws hypothesis_violation (index = offending i) if the Fuchsian test
/// fails and insufficient_precision unless l < trunc.
LeadingData leading_data(const DeltaOp& op);

/// Same construction with l = min_i ord a_i, usable at irregular points too.
/// Coincides with leading_data() when the operator is Fuchsian.
LeadingData lowest_order_data(const DeltaOp& op);

/// Checks that the prefix polynomial solves F up to the order a true
/// solution start must reach, z^(P+l). Throws prefix_inconsistent otherwise.
void validate_prefix(const MPoly& F, std::span<const Rational> prefix, std::size_t l);

}  // namespace fpsr

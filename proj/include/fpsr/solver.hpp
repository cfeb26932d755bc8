#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fpsr/mpoly.hpp"
#include "fpsr/rational.hpp"
#include "fpsr/reduction.hpp"
#include "fpsr/series.hpp"

namespace fpsr {

/// Coefficients c_1..c_J of psi, where phi = phi_k + z^k psi.
struct SolutionTail {
    std::vector<Rational> c;
    std::size_t k = 0;

    std::size_t size() const { return c.size(); }
    friend bool operator==(const SolutionTail&, const SolutionTail&) = default;
};

/// Production engine: c_j = [z^(j-1)] M(z, psi_<j, ..., delta^n psi_<j) / Lbar(j+k),
/// with the products of M extended incrementally.
SolutionTail solve_substitution(const Reduction& red, std::size_t J);

/// Verification engine: the closed combinatorial expansion of
/// [z^(j-1)] M(...) over monomials, compositions of j-1-p and the inner
/// sums over (m_1 ... m_q)^i c_m1 ... c_mq. Exponential in the degree of M;
/// meant for small J.
SolutionTail solve_explicit(const Reduction& red, std::size_t J);

/// phi truncated at z^(k+J): prefix coefficients up to z^k, then c_j at z^(k+j).
USeries recombine(std::span<const Rational> prefix, std::size_t k, const SolutionTail& tail);

/// Valuation of F(z, Phi), or a lower bound when every computed coefficient vanishes.
struct ResidualOrder {
    std::size_t value = 0;
    bool exact = true;

    /// "7" or ">= 7".
    std::string str() const;
};

/// Valuation of F(z, phi, ..., delta^n phi) within phi's truncation T.
ResidualOrder residual_order(const MPoly& F, const USeries& phi);

/// Valuation of F along the polynomial phi (exact, no truncation of phi),
/// examined through degree `through`.
ResidualOrder polynomial_residual_order(const MPoly& F, std::span<const Rational> phi_coeffs, std::size_t through);

}  // namespace fpsr

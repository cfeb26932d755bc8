#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fpsr/mpoly.hpp"
#include "fpsr/rational.hpp"
#include "fpsr/series.hpp"
#include "fpsr/upoly.hpp"

namespace fpsr {

/// The reduced equation Lbar(delta + k) psi = z M(z, psi, delta psi, ..., delta^n psi)
/// for the tail of phi = phi_k + z^k psi.
struct Reduction {
    std::size_t l = 0;
    std::vector<Rational> b;
    UPoly Lbar;
    std::size_t k0 = 0;
    std::size_t k = 1;
    /// Right-hand side in the delta basis y_i = delta^i psi.
    MPoly M;
    /// Right-hand side in the shifted basis Y_i = (delta + k)^i psi.
    MPoly M_shifted;
    /// c_1..c_k of phi (the user prefix, extended if it was shorter than k).
    std::vector<Rational> prefix;
    /// phi_k, the partial sum of phi through z^k.
    USeries phi_k;
    /// True when built from the Fuchsian leading data (deg Lbar = n).
    bool fuchsian = true;

    std::size_t order() const { return M.order(); }
};

/// Largest positive integer root of Lbar, or 0 when it has none.
std::size_t k0_bound(const UPoly& Lbar);

inline std::size_t choose_k(std::size_t k0, std::size_t l) { return k0 > l + 1 ? k0 : l + 1; }

/// Builds the reduced equation at a Fuchsian point. Throws
/// hypothesis_violation when the linearized operator is not Fuchsian,
/// resonance when a coefficient below k is free, internal_consistency when
/// the division by z^(k+l+1) fails.
Reduction reduce(const MPoly& F, std::span<const Rational> prefix);

/// Same construction driven by the lowest-order data of the linearized
/// operator. At an irregular point deg Lbar < n; the recurrence for the tail
/// still determines every coefficient, though no convergence claim follows.
Reduction reduce_formal(const MPoly& F, std::span<const Rational> prefix);

/// Continues the prefix to `target` coefficients by coefficient matching,
/// solving Lbar(j) c_j = rho_j at each step. Throws no_formal_solution when
/// Lbar(j) = 0 != rho_j and resonance (index j) when Lbar(j) = 0 = rho_j.
std::vector<Rational> extend_prefix(const MPoly& F, std::span<const Rational> prefix, std::size_t target);

/// M(z, y) from M_shifted(z, Y) via Y_i = sum_t C(i,t) k^(i-t) y_t.
MPoly to_delta_basis(const MPoly& m_shifted, std::size_t k);
/// Inverse change of variables, y_t = sum_s C(t,s) (-k)^(t-s) Y_s.
MPoly to_shifted_basis(const MPoly& m, std::size_t k);

/// G(z, Y) = F(z, phi_k + z^k Y_0, ..., delta^n phi_k + z^k Y_n).
MPoly shifted_equation(const MPoly& F, std::span<const Rational> phi_k_coeffs, std::size_t k);

}  // namespace fpsr

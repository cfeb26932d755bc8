#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "fpsr/mpoly.hpp"
#include "fpsr/rational.hpp"
#include "fpsr/upoly.hpp"

namespace fpsr {

/// Mtilde(z, w): coefficient of z^p w^Q is the sum of |alpha_{p,q}| over |q| = Q.
/// Only positive coefficients are stored.
struct MajorantSeries {
    std::map<std::pair<unsigned, unsigned>, Rational> coeffs;

    bool empty() const { return coeffs.empty(); }
    /// The same data as a polynomial in z and the single variable w.
    MPoly as_poly() const;
};

MajorantSeries build_majorant(const MPoly& M);

/// Certified lower bound for sigma = inf_j |Lbar(j+k)| / j^n.
///
/// With t = 1/j, |Lbar(j+k)|/j^n = |h(t)| for the polynomial
/// h(t) = sum_i b_i (1 + k t)^i t^(n-i), h(0) = b_n. On (0, eps] neither h nor
/// h' has a root (Cauchy bound), so |h| is monotone there and the infimum over
/// j >= j_star = ceil(1/eps) is min(|h(1/j_star)|, |b_n|).
struct SigmaBound {
    Rational sigma;
    /// min over j = 1..j_star of |Lbar(j+k)| / j^n
    Rational finite_min;
    /// |b_n|, the limit of the ratio
    Rational tail_limit;
    std::size_t j_star = 1;
};

SigmaBound sigma_lower_bound(const UPoly& Lbar, std::size_t k, std::size_t n);

/// C_1..C_J from sigma j^n C_j = [z^(j-1)] Mtilde(z, w), w = sum m^n C_m z^m,
/// with the powers of w extended one coefficient per step.
std::vector<Rational> majorant_coeffs(const MajorantSeries& mt, const Rational& sigma, std::size_t n, std::size_t J);

/// Independent route: Picard iteration w <- z Mtilde(z, w) / sigma on
/// truncated series gives a_j, then C_j = a_j / j^n.
std::vector<Rational> majorant_coeffs_implicit(const MajorantSeries& mt, const Rational& sigma, std::size_t n,
                                               std::size_t J);

/// sum |alpha_{p,q}| r^p rho^|q|, an upper bound for max |M| on the closed polydisk.
Rational mu_bound(const MPoly& M, const Rational& r, const Rational& rho);

/// (n+1)^(n+1) / (n+2)^(n+2)
Rational big_n(std::size_t n);

struct RadiusCertificate {
    Rational sigma;
    Rational r;
    Rational rho;
    Rational mu;
    Rational bigN;
    /// R = r rho / (rho + mu r / (sigma N))
    Rational R;
};

RadiusCertificate radius(const Rational& sigma, std::size_t n, const Rational& r, const Rational& rho,
                         const Rational& mu);

using Decimal30 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<30>>;

/// Root of f = 0, df/dw = 0 for f(z,w) = sigma w (1 - w/rho)^(n+1) - mu z / (1 - z/r),
/// found by damped Newton iteration in 30-digit arithmetic.
struct CriticalPoint {
    Decimal30 w0;
    Decimal30 z0;
    int iterations = 0;
};

CriticalPoint critical_point_check(const Rational& sigma, std::size_t n, const Rational& r, const Rational& rho,
                                   const Rational& mu);

struct PolydiskGrid {
    std::vector<Rational> r;
    std::vector<Rational> rho;

    /// {2^e : e = -4..8} for both radii.
    static PolydiskGrid default_grid();
};

/// The certificate with the largest R over the grid; ties go to the
/// lexicographically smallest (r, rho).
RadiusCertificate optimize_polydisk(const MPoly& M, const Rational& sigma, std::size_t n, const PolydiskGrid& grid);

}  // namespace fpsr

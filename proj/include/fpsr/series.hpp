#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpsr/rational.hpp"

namespace fpsr {

/// Truncated univariate power series in z with rational coefficients.
///
/// Coefficients of degree 0..trunc() are known exactly; nothing is known about
/// higher degrees. They are never treated as zero.
class USeries {
public:
    /// The zero series known through degree `trunc`.
    explicit USeries(std::size_t trunc = 0) : c_(trunc + 1) {}
    /// Coefficients of degree 0..coeffs.size()-1; truncation is size()-1. Must be nonempty.
    explicit USeries(std::vector<Rational> coeffs);

    static USeries monomial(const Rational& coeff, std::size_t degree, std::size_t trunc);
    /// The polynomial sum_j coeffs[j] z^j, exact, known through degree `trunc`.
    static USeries polynomial(std::span<const Rational> coeffs, std::size_t trunc);

    std::size_t trunc() const { return c_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t j) const { return c_[j]; }
    /// Checked access: degrees above the truncation raise insufficient_precision.
    const Rational& coeff(std::size_t j) const;

    /// Smallest degree with a nonzero coefficient, or nullopt when every known
    /// coefficient vanishes (then only "ord >= trunc()+1" is known).
    std::optional<std::size_t> valuation() const;
    bool is_zero_through_trunc() const { return !valuation().has_value(); }

    /// Restriction to degree `t`; `t` must not exceed trunc().
    USeries truncated(std::size_t t) const;
    /// Multiplication by z^k.
    USeries shifted(std::size_t k) const;
    USeries scaled(const Rational& a) const;

    std::string str() const;

    friend USeries operator+(const USeries& a, const USeries& b);
    friend USeries operator-(const USeries& a, const USeries& b);
    /// Product known through min(Ta + vb, Tb + va), v being the valuation or T+1.
    friend USeries operator*(const USeries& a, const USeries& b);
    friend bool operator==(const USeries& a, const USeries& b) = default;

private:
    std::vector<Rational> c_;
};

/// Product of a and b computed only through degree t (t <= both truncations).
USeries mul_trunc(const USeries& a, const USeries& b, std::size_t t);

/// delta^i s with delta = z d/dz: coefficient j is multiplied by j^i.
USeries delta(const USeries& s, unsigned i);

/// (delta + k)^i s: coefficient j is multiplied by (j + k)^i.
USeries shifted_delta(const USeries& s, unsigned k, unsigned i);

}  // namespace fpsr

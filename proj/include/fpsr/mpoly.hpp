#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fpsr/rational.hpp"
#include "fpsr/series.hpp"

namespace fpsr {

/// Exponents of z^p * y0^q[0] * ... * yn^q[n]. Ordered lexicographically by (p, q).
struct Monomial {
    unsigned p = 0;
    std::vector<unsigned> q;

    unsigned y_degree() const;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in z, y0, ..., yn with rational coefficients. No zero
/// coefficient is ever stored and every key has exactly n+1 y-exponents.
class MPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    /// The zero polynomial in `ny` y-variables (ny = n+1).
    explicit MPoly(std::size_t ny = 1) : ny_(ny) {}

    static MPoly constant(std::size_t ny, const Rational& c);
    static MPoly z_power(std::size_t ny, unsigned p, const Rational& c = 1);
    static MPoly y(std::size_t ny, std::size_t i);

    std::size_t num_y() const { return ny_; }
    /// Equation order n = num_y() - 1.
    std::size_t order() const { return ny_ - 1; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;

    /// Adds c * m, dropping the entry if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    unsigned total_degree() const;
    unsigned max_y_degree() const;
    /// Highest power of z dividing every term (0 for the zero polynomial).
    unsigned min_z_power() const;
    /// Same polynomial viewed in `ny` variables; dropped variables must not occur.
    MPoly with_num_y(std::size_t ny) const;

    /// Exact division by z^e; every term must carry at least z^e.
    MPoly divided_by_z_power(unsigned e) const;
    MPoly times_z_power(unsigned e) const;
    MPoly scaled(const Rational& c) const;
    MPoly pow(unsigned e) const;

    /// Canonical text: terms in key order joined by " + ", each written
    /// "c * z^p * y0^q0 * ..." with zero exponents omitted; "0" if empty.
    /// parse_equation() reads it back.
    std::string str() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) = default;

private:
    void check_compatible(const MPoly& o) const;

    std::size_t ny_;
    Terms terms_;
};

/// Formal partial derivative with respect to y_i.
MPoly partial(const MPoly& f, std::size_t i);

/// F(z, args_0(z), ..., args_n(z)) known exactly through degree zTrunc.
/// Every argument must be known through at least zTrunc.
USeries substitute(const MPoly& f, std::span<const USeries> args, std::size_t z_trunc);

/// Value of f at the point (z, y_0, ..., y_n).
Rational evaluate(const MPoly& f, const Rational& z, std::span<const Rational> y);

/// Replaces y_i by ys[i] (z stays z). All ys share one variable count, which
/// becomes the variable count of the result.
MPoly compose(const MPoly& f, std::span<const MPoly> ys);

}  // namespace fpsr

#pragma once

#include <string>
#include <vector>

#include "fpsr/rational.hpp"

namespace fpsr {

/// Dense univariate polynomial sum_i coeffs[i] x^i. Trailing zeros are trimmed.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

    Rational operator()(const Rational& x) const;
    UPoly derivative() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly&, const UPoly&) = default;

    std::string str(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> c_;
};

}  // namespace fpsr

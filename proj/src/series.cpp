#include "fpsr/series.hpp"

#include <algorithm>

#include "fpsr/errors.hpp"
#include "kronecker.hpp"

namespace fpsr {

namespace {

std::size_t effective_valuation(const USeries& s) {
    return s.valuation().value_or(s.trunc() + 1);
}

}  // namespace

USeries::USeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(ErrorKind::invalid_argument, "series needs at least one coefficient");
}

USeries USeries::monomial(const Rational& coeff, std::size_t degree, std::size_t trunc) {
    USeries s(trunc);
    if (degree <= trunc) s.c_[degree] = coeff;
    return s;
}

USeries USeries::polynomial(std::span<const Rational> coeffs, std::size_t trunc) {
    USeries s(trunc);
    for (std::size_t j = 0; j < coeffs.size() && j <= trunc; ++j) s.c_[j] = coeffs[j];
    return s;
}

const Rational& USeries::coeff(std::size_t j) const {
    if (j > trunc())
        throw Error(ErrorKind::insufficient_precision,
                    "coefficient of z^" + std::to_string(j) + " requested from a series known through z^" +
                        std::to_string(trunc()));
    return c_[j];
}

std::optional<std::size_t> USeries::valuation() const {
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return j;
    return std::nullopt;
}

USeries USeries::truncated(std::size_t t) const {
    if (t > trunc())
        throw Error(ErrorKind::insufficient_precision,
                    "cannot extend a series known through z^" + std::to_string(trunc()) + " to z^" +
                        std::to_string(t));
    return USeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(t + 1)));
}

USeries USeries::shifted(std::size_t k) const {
    USeries out(trunc() + k);
    std::copy(c_.begin(), c_.end(), out.c_.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

USeries USeries::scaled(const Rational& a) const {
    USeries out = *this;
    for (auto& c : out.c_) c *= a;
    return out;
}

std::string USeries::str() const {
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[j].str();
        if (j > 0) out += "*z^" + std::to_string(j);
    }
    if (out.empty()) out = "0";
    return out + " + O(z^" + std::to_string(trunc() + 1) + ")";
}

USeries operator+(const USeries& a, const USeries& b) {
    USeries out(std::min(a.trunc(), b.trunc()));
    for (std::size_t j = 0; j <= out.trunc(); ++j) out.c_[j] = a.c_[j] + b.c_[j];
    return out;
}

USeries operator-(const USeries& a, const USeries& b) {
    USeries out(std::min(a.trunc(), b.trunc()));
    for (std::size_t j = 0; j <= out.trunc(); ++j) out.c_[j] = a.c_[j] - b.c_[j];
    return out;
}

USeries operator*(const USeries& a, const USeries& b) {
    std::size_t t = std::min(a.trunc() + effective_valuation(b), b.trunc() + effective_valuation(a));
    USeries out(t);
    for (std::size_t i = 0; i <= a.trunc() && i <= t; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j <= b.trunc() && i + j <= t; ++j) out.c_[i + j].add_product(a.c_[i], b.c_[j]);
    }
    return out;
}

USeries mul_trunc(const USeries& a, const USeries& b, std::size_t t) {
    if (t > a.trunc() || t > b.trunc())
        throw Error(ErrorKind::insufficient_precision, "product requested beyond operand truncation");
    // integer numerators over one common denominator per operand, so the
    // convolution runs without gcds and each output is reduced once
    auto numerators = [t](const USeries& s, mpz_class& den) {
        den = 1;
        for (std::size_t i = 0; i <= t; ++i)
            if (!s[i].is_zero()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s[i].mpq().get_den_mpz_t());
        std::vector<mpz_class> num(t + 1);
        for (std::size_t i = 0; i <= t; ++i) {
            if (s[i].is_zero()) continue;
            mpz_divexact(num[i].get_mpz_t(), den.get_mpz_t(), s[i].mpq().get_den_mpz_t());
            num[i] *= s[i].mpq().get_num();
        }
        return num;
    };
    mpz_class da;
    mpz_class db;
    const auto na = numerators(a, da);
    const auto nb = numerators(b, db);
    std::vector<mpz_class> acc(t + 1);
    detail::block_addmul(acc, 0, na, nb);
    const mpz_class den = da * db;
    std::vector<Rational> out;
    out.reserve(t + 1);
    for (auto& x : acc) out.emplace_back(x, den);
    return USeries(std::move(out));
}

USeries delta(const USeries& s, unsigned i) { return shifted_delta(s, 0, i); }

USeries shifted_delta(const USeries& s, unsigned k, unsigned i) {
    std::vector<Rational> out(s.coeffs());
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (out[j].is_zero()) continue;
        out[j] *= Rational(static_cast<long>(j + k)).pow(i);
    }
    return USeries(std::move(out));
}

}  // namespace fpsr

#include "fpsr/linearization.hpp"

#include "fpsr/errors.hpp"

namespace fpsr {

void Problem::validate() const {
    if (F.is_zero()) throw Error(ErrorKind::invalid_argument, "F is identically zero");
    if (prefix.empty()) throw Error(ErrorKind::invalid_argument, "the solution prefix must not be empty");
}

std::vector<USeries> jet(std::span<const Rational> prefix, std::size_t n, std::size_t T) {
    if (T > prefix.size())
        throw Error(ErrorKind::insufficient_precision,
                    "prefix has " + std::to_string(prefix.size()) + " coefficients, truncation z^" +
                        std::to_string(T) + " requested");
    std::vector<Rational> c(T + 1);
    for (std::size_t j = 1; j <= T; ++j) c[j] = prefix[j - 1];
    return jet(USeries(std::move(c)), n);
}

std::vector<USeries> jet(const USeries& phi, std::size_t n) {
    std::vector<USeries> out;
    out.reserve(n + 1);
    out.push_back(phi);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(delta(out.back(), 1));
    return out;
}

DeltaOp linearized_operator(const MPoly& F, std::span<const Rational> prefix, std::size_t T) {
    const auto phi = jet(prefix, F.order(), T);
    std::vector<USeries> a;
    for (std::size_t i = 0; i < F.num_y(); ++i) a.push_back(substitute(partial(F, i), phi, T));
    return DeltaOp(std::move(a));
}

namespace {

LeadingData read_leading(const DeltaOp& op, std::size_t l) {
    if (l >= op.trunc())
        throw Error(ErrorKind::insufficient_precision,
                    "leading order z^" + std::to_string(l) + " is not below the truncation z^" +
                        std::to_string(op.trunc()) + "; supply more prefix coefficients");
    LeadingData out{l, {}};
    for (const auto& a : op.coeffs()) out.b.push_back(a[l]);
    return out;
}

}  // namespace

LeadingData leading_data(const DeltaOp& op) {
    if (auto bad = first_fuchsian_violation(op)) {
        throw Error(ErrorKind::hypothesis_violation,
                    "z = 0 is not a Fuchsian point of the linearized operator: ord a_" + std::to_string(*bad) +
                        " < ord a_" + std::to_string(op.order()),
                    static_cast<long>(*bad));
    }
    return read_leading(op, *op[op.order()].valuation());
}

LeadingData lowest_order_data(const DeltaOp& op) {
    std::size_t l = *op[op.order()].valuation();
    for (const auto& a : op.coeffs())
        if (auto v = a.valuation(); v && *v < l) l = *v;
    return read_leading(op, l);
}

void validate_prefix(const MPoly& F, std::span<const Rational> prefix, std::size_t l) {
    const std::size_t P = prefix.size();
    const std::size_t through = P + l;
    // the prefix is an exact polynomial, so padding it with zeros is exact
    std::vector<Rational> c(through + 1);
    for (std::size_t j = 1; j <= P; ++j) c[j] = prefix[j - 1];
    const auto residual = substitute(F, jet(USeries(std::move(c)), F.order()), through);
    if (auto v = residual.valuation()) {
        throw Error(ErrorKind::prefix_inconsistent,
                    "the prefix does not start a formal solution: residual has a nonzero z^" + std::to_string(*v) +
                        " term (expected order >= " + std::to_string(through + 1) + ")",
                    static_cast<long>(*v));
    }
}

}  // namespace fpsr

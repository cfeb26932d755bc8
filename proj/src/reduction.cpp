#include "fpsr/reduction.hpp"

#include <numeric>

#include "fpsr/errors.hpp"
#include "fpsr/linearization.hpp"

namespace fpsr {

namespace {

// Candidate positive roots beyond this bound are not enumerated.
constexpr unsigned long kMaxRootSearch = 10'000'000;

std::vector<mpz_class> integerized(const UPoly& p) {
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.mpq().get_den_mpz_t());
    std::vector<mpz_class> out;
    for (const auto& c : p.coeffs()) out.push_back(c.num() * (lcm / c.den()));
    return out;
}

Reduction reduce_with(const MPoly& F, std::span<const Rational> prefix, const LeadingData& lead, bool fuchsian) {
    const std::size_t n = F.order();
    validate_prefix(F, prefix, lead.l);

    Reduction red;
    red.l = lead.l;
    red.b = lead.b;
    red.Lbar = UPoly(lead.b);
    red.k0 = k0_bound(red.Lbar);
    red.k = choose_k(red.k0, red.l);
    red.fuchsian = fuchsian;

    if (prefix.size() < red.k) {
        red.prefix = extend_prefix(F, prefix, red.k);
    } else {
        red.prefix.assign(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(red.k));
    }
    std::vector<Rational> phi(red.k + 1);
    std::copy(red.prefix.begin(), red.prefix.end(), phi.begin() + 1);
    red.phi_k = USeries(std::move(phi));

    const std::size_t ny = n + 1;
    const auto k = static_cast<unsigned>(red.k);
    const auto l = static_cast<unsigned>(red.l);
    MPoly G = shifted_equation(F, red.prefix, red.k);

    MPoly linear(ny);
    for (std::size_t i = 0; i < ny; ++i) linear += MPoly::y(ny, i).scaled(red.b[i]);
    MPoly rest = G - linear.times_z_power(k + l);
    if (!rest.is_zero() && rest.min_z_power() < k + l + 1) {
        throw Error(ErrorKind::internal_consistency,
                    "F(z, phi_k + z^k Y) - z^(k+l) Lbar-part is not divisible by z^" + std::to_string(k + l + 1) +
                        " (inconsistent prefix?)");
    }
    red.M_shifted = rest.divided_by_z_power(k + l + 1).scaled(-1);
    red.M = to_delta_basis(red.M_shifted, red.k);
    return red;
}

}  // namespace

std::size_t k0_bound(const UPoly& Lbar) {
    if (Lbar.is_zero()) throw Error(ErrorKind::invalid_argument, "k0_bound: zero polynomial");
    const auto a = integerized(Lbar);
    std::size_t s = 0;
    while (a[s] == 0) ++s;
    if (s + 1 == a.size()) return 0;  // c * x^s has no positive root

    // positive integer roots divide a[s] and lie below the Cauchy bound
    mpq_class cauchy = 0;
    for (std::size_t i = s; i + 1 < a.size(); ++i) {
        mpq_class r(mpz_class(abs(a[i])), mpz_class(abs(a.back())));
        r.canonicalize();
        if (r > cauchy) cauchy = r;
    }
    mpz_class bound = mpz_class(cauchy.get_num() / cauchy.get_den()) + 1;
    if (abs(a[s]) < bound) bound = abs(a[s]);
    if (bound > kMaxRootSearch)
        throw Error(ErrorKind::invalid_argument, "k0_bound: root search range too large (" + bound.get_str() + ")");

    std::size_t best = 0;
    const auto top = bound.get_ui();
    for (unsigned long r = 1; r <= top; ++r) {
        if (!mpz_divisible_ui_p(a[s].get_mpz_t(), r)) continue;
        if (Lbar(Rational(static_cast<long>(r))).is_zero()) best = r;
    }
    return best;
}

Reduction reduce(const MPoly& F, std::span<const Rational> prefix) {
    const auto op = linearized_operator(F, prefix, prefix.size());
    return reduce_with(F, prefix, leading_data(op), true);
}

Reduction reduce_formal(const MPoly& F, std::span<const Rational> prefix) {
    const auto op = linearized_operator(F, prefix, prefix.size());
    return reduce_with(F, prefix, lowest_order_data(op), fuchsian_test_delta(op));
}

std::vector<Rational> extend_prefix(const MPoly& F, std::span<const Rational> prefix, std::size_t target) {
    std::vector<Rational> out(prefix.begin(), prefix.end());
    if (target <= out.size()) return out;

    const auto op = linearized_operator(F, prefix, prefix.size());
    const auto lead = lowest_order_data(op);
    validate_prefix(F, prefix, lead.l);
    const UPoly lambda(lead.b);

    for (std::size_t j = out.size() + 1; j <= target; ++j) {
        const std::size_t deg = j + lead.l;
        std::vector<Rational> c(deg + 1);
        std::copy(out.begin(), out.end(), c.begin() + 1);
        const auto residual = substitute(F, jet(USeries(std::move(c)), F.order()), deg);
        if (auto v = residual.valuation(); v && *v < deg)
            throw Error(ErrorKind::prefix_inconsistent,
                        "residual has a nonzero z^" + std::to_string(*v) + " term while extending the prefix",
                        static_cast<long>(*v));
        const Rational rho = -residual[deg];
        const Rational lam = lambda(Rational(static_cast<long>(j)));
        if (lam.is_zero()) {
            if (!rho.is_zero())
                throw Error(ErrorKind::no_formal_solution,
                            "no formal power series solution: coefficient of z^" + std::to_string(j) +
                                " is obstructed (Lbar(" + std::to_string(j) + ") = 0, right side " + rho.str() + ")",
                            static_cast<long>(j));
            throw Error(ErrorKind::resonance,
                        "coefficient of z^" + std::to_string(j) + " is free (Lbar(" + std::to_string(j) +
                            ") = 0); supply it in the prefix",
                        static_cast<long>(j));
        }
        out.push_back(rho / lam);
    }
    return out;
}

MPoly to_delta_basis(const MPoly& m_shifted, std::size_t k) {
    const std::size_t ny = m_shifted.num_y();
    std::vector<MPoly> ys;
    for (std::size_t i = 0; i < ny; ++i) {
        MPoly y(ny);
        for (std::size_t t = 0; t <= i; ++t) {
            Rational c = binomial(static_cast<unsigned>(i), static_cast<unsigned>(t)) *
                         Rational(static_cast<long>(k)).pow(static_cast<unsigned>(i - t));
            y += MPoly::y(ny, t).scaled(c);
        }
        ys.push_back(std::move(y));
    }
    return compose(m_shifted, ys);
}

MPoly to_shifted_basis(const MPoly& m, std::size_t k) {
    const std::size_t ny = m.num_y();
    std::vector<MPoly> ys;
    for (std::size_t t = 0; t < ny; ++t) {
        MPoly y(ny);
        for (std::size_t s = 0; s <= t; ++s) {
            Rational c = binomial(static_cast<unsigned>(t), static_cast<unsigned>(s)) *
                         Rational(-static_cast<long>(k)).pow(static_cast<unsigned>(t - s));
            y += MPoly::y(ny, s).scaled(c);
        }
        ys.push_back(std::move(y));
    }
    return compose(m, ys);
}

MPoly shifted_equation(const MPoly& F, std::span<const Rational> phi_k_coeffs, std::size_t k) {
    const std::size_t ny = F.num_y();
    std::vector<MPoly> ys;
    for (std::size_t i = 0; i < ny; ++i) {
        MPoly y = MPoly::y(ny, i).times_z_power(static_cast<unsigned>(k));
        for (std::size_t j = 1; j <= phi_k_coeffs.size(); ++j) {
            Rational c = phi_k_coeffs[j - 1] * Rational(static_cast<long>(j)).pow(static_cast<unsigned>(i));
            y += MPoly::z_power(ny, static_cast<unsigned>(j), c);
        }
        ys.push_back(std::move(y));
    }
    return compose(F, ys);
}

}  // namespace fpsr

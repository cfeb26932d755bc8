#include "fpsr/majorant.hpp"

#include <algorithm>
#include <optional>

#include "fpsr/errors.hpp"
#include "online_eval.hpp"

namespace fpsr {

namespace {

// every root t of p satisfies |t| > |p_0| / (|p_0| + max_{i>=1} |p_i|)
Rational root_free_radius(const UPoly& p) {
    const Rational a0 = p.coeff(0).abs();
    Rational top;
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) top = std::max(top, p.coeffs()[i].abs());
    if (top.is_zero()) return 1;
    return a0 / (a0 + top);
}

Decimal30 to_decimal30(const Rational& x) {
    return Decimal30(x.num().get_str()) / Decimal30(x.den().get_str());
}

Rational positive(const Rational& x, const char* what) {
    if (x.sign() <= 0) throw Error(ErrorKind::invalid_argument, std::string(what) + " must be positive");
    return x;
}

}  // namespace

MPoly MajorantSeries::as_poly() const {
    MPoly out(1);
    for (const auto& [key, c] : coeffs) out.add_term(Monomial{key.first, {key.second}}, c);
    return out;
}

MajorantSeries build_majorant(const MPoly& M) {
    MajorantSeries mt;
    for (const auto& [m, c] : M.terms()) mt.coeffs[{m.p, m.y_degree()}] += c.abs();
    return mt;
}

SigmaBound sigma_lower_bound(const UPoly& Lbar, std::size_t k, std::size_t n) {
    if (Lbar.degree() != static_cast<int>(n))
        throw Error(ErrorKind::invalid_argument, "sigma_lower_bound: Lbar must have degree n = " + std::to_string(n));

    // h(t) = sum_i b_i (1 + k t)^i t^(n-i)
    const UPoly one_kt({Rational(1), Rational(static_cast<long>(k))});
    UPoly h;
    UPoly shift_pow({Rational(1)});
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<Rational> mono(n - i + 1);
        mono.back() = Lbar.coeff(i);
        h = h + shift_pow * UPoly(std::move(mono));
        shift_pow = shift_pow * one_kt;
    }

    Rational eps = root_free_radius(h);
    const UPoly dh = h.derivative();
    if (!dh.is_zero()) {
        std::size_t s = 0;
        while (dh.coeff(s).is_zero()) ++s;
        std::vector<Rational> p(dh.coeffs().begin() + static_cast<std::ptrdiff_t>(s), dh.coeffs().end());
        eps = std::min(eps, root_free_radius(UPoly(std::move(p))));
    }
    eps /= 2;
    const Rational inv = eps.inverse();
    const mpz_class ceil_inv = (inv.num() + inv.den() - 1) / inv.den();

    SigmaBound out;
    out.j_star = std::max<std::size_t>(1, ceil_inv.get_ui());
    out.tail_limit = Lbar.leading().abs();
    for (std::size_t j = 1; j <= out.j_star; ++j) {
        Rational ratio = Lbar(Rational(static_cast<long>(j + k))).abs() /
                         Rational(static_cast<long>(j)).pow(static_cast<unsigned>(n));
        if (ratio.is_zero())
            throw Error(ErrorKind::resonance, "Lbar(" + std::to_string(j + k) + ") = 0", static_cast<long>(j));
        if (j == 1 || ratio < out.finite_min) out.finite_min = ratio;
    }
    out.sigma = std::min(out.finite_min, out.tail_limit);
    return out;
}

std::vector<Rational> majorant_coeffs(const MajorantSeries& mt, const Rational& sigma, std::size_t n, std::size_t J) {
    positive(sigma, "sigma");
    detail::OnlineEvaluator eval(mt.as_poly());
    std::vector<Rational> C;
    C.reserve(J);
    std::vector<Rational> input(1);
    for (std::size_t j = 1; j <= J; ++j) {
        const std::size_t m = j - 1;
        input[0] = m == 0 ? Rational() : C[m - 1] * Rational(static_cast<long>(m)).pow(static_cast<unsigned>(n));
        Rational rhs = eval.step(input);
        C.push_back(rhs / (sigma * Rational(static_cast<long>(j)).pow(static_cast<unsigned>(n))));
    }
    return C;
}

std::vector<Rational> majorant_coeffs_implicit(const MajorantSeries& mt, const Rational& sigma, std::size_t n,
                                               std::size_t J) {
    positive(sigma, "sigma");
    if (J == 0) return {};
    const MPoly poly = mt.as_poly();
    const Rational inv_sigma = sigma.inverse();
    USeries w(J);
    for (std::size_t iter = 0; iter < J; ++iter) {
        std::vector<USeries> arg{w.truncated(J - 1)};
        w = substitute(poly, arg, J - 1).shifted(1).scaled(inv_sigma);
    }
    std::vector<Rational> C;
    for (std::size_t j = 1; j <= J; ++j)
        C.push_back(w[j] / Rational(static_cast<long>(j)).pow(static_cast<unsigned>(n)));
    return C;
}

Rational mu_bound(const MPoly& M, const Rational& r, const Rational& rho) {
    positive(r, "r");
    positive(rho, "rho");
    Rational mu;
    for (const auto& [m, c] : M.terms()) mu += c.abs() * r.pow(m.p) * rho.pow(m.y_degree());
    return mu;
}

Rational big_n(std::size_t n) {
    const auto e1 = static_cast<unsigned>(n + 1);
    const auto e2 = static_cast<unsigned>(n + 2);
    return Rational(static_cast<long>(n + 1)).pow(e1) / Rational(static_cast<long>(n + 2)).pow(e2);
}

RadiusCertificate radius(const Rational& sigma, std::size_t n, const Rational& r, const Rational& rho,
                         const Rational& mu) {
    positive(sigma, "sigma");
    positive(r, "r");
    positive(rho, "rho");
    if (mu.sign() < 0) throw Error(ErrorKind::invalid_argument, "mu must be nonnegative");
    RadiusCertificate cert{sigma, r, rho, mu, big_n(n), {}};
    cert.R = r * rho / (rho + mu * r / (sigma * cert.bigN));
    return cert;
}

CriticalPoint critical_point_check(const Rational& sigma, std::size_t n, const Rational& r, const Rational& rho,
                                   const Rational& mu) {
    const auto cert = radius(sigma, n, r, rho, mu);
    const Decimal30 s = to_decimal30(sigma);
    const Decimal30 rr = to_decimal30(r);
    const Decimal30 p = to_decimal30(rho);
    const Decimal30 m = to_decimal30(mu);
    const auto np1 = static_cast<int>(n + 1);
    const Decimal30 eps("1e-27");

    // f_w = s (1 - w/p)^n (1 - (n+2) w / p)
    auto f_w = [&](const Decimal30& w) {
        return s * pow(1 - w / p, np1 - 1) * (1 - (np1 + 1) * w / p);
    };
    auto f_ww = [&](const Decimal30& w) {
        Decimal30 u = 1 - w / p;
        Decimal30 lower = np1 >= 2 ? Decimal30(pow(u, np1 - 2)) : Decimal30(0);
        return s * (-(np1 - 1) / p * lower * (1 - (np1 + 1) * w / p) - (np1 + 1) / p * pow(u, np1 - 1));
    };
    auto f = [&](const Decimal30& z, const Decimal30& w) {
        return s * w * pow(1 - w / p, np1) - m * z / (1 - z / rr);
    };
    auto f_z = [&](const Decimal30& z) { return -m / pow(1 - z / rr, 2); };

    // seed away from the closed form so the iteration has work to do
    Decimal30 w = Decimal30("0.9") * p / (np1 + 1);
    Decimal30 z = Decimal30("0.9") * to_decimal30(cert.R);
    const bool degenerate = mu.is_zero();

    auto norm = [&](const Decimal30& zz, const Decimal30& ww) {
        Decimal30 a = abs(f_w(ww));
        if (!degenerate) a = std::max(a, Decimal30(abs(f(zz, ww))));
        return a;
    };

    for (int it = 1; it <= 200; ++it) {
        const Decimal30 dw = -f_w(w) / f_ww(w);
        const Decimal30 dz = degenerate ? Decimal30(0) : (-f(z, w) - f_w(w) * dw) / f_z(z);
        const Decimal30 before = norm(z, w);
        Decimal30 lambda = 1;
        Decimal30 zn = z + dz;
        Decimal30 wn = w + dw;
        while (lambda > Decimal30("1e-12") && (zn >= rr || wn >= p || norm(zn, wn) > before)) {
            lambda /= 2;
            zn = z + lambda * dz;
            wn = w + lambda * dw;
        }
        z = zn;
        w = wn;
        if (abs(lambda * dw) <= eps * abs(w) && abs(lambda * dz) <= eps * abs(z)) {
            if (degenerate) z = rr;
            return {w, z, it};
        }
    }
    throw Error(ErrorKind::numeric_failure, "critical_point_check: Newton iteration did not converge");
}

PolydiskGrid PolydiskGrid::default_grid() {
    PolydiskGrid g;
    for (int e = -4; e <= 8; ++e) {
        Rational v = e >= 0 ? Rational(2).pow(static_cast<unsigned>(e)) : Rational(2).pow(static_cast<unsigned>(-e)).inverse();
        g.r.push_back(v);
        g.rho.push_back(v);
    }
    return g;
}

RadiusCertificate optimize_polydisk(const MPoly& M, const Rational& sigma, std::size_t n, const PolydiskGrid& grid) {
    if (grid.r.empty() || grid.rho.empty()) throw Error(ErrorKind::invalid_argument, "polydisk grid is empty");
    std::vector<Rational> rs = grid.r;
    std::vector<Rational> rhos = grid.rho;
    std::sort(rs.begin(), rs.end());
    std::sort(rhos.begin(), rhos.end());
    std::optional<RadiusCertificate> best;
    for (const auto& r : rs) {
        for (const auto& rho : rhos) {
            auto cert = radius(sigma, n, r, rho, mu_bound(M, r, rho));
            if (!best || cert.R > best->R) best = std::move(cert);
        }
    }
    return *best;
}

}  // namespace fpsr

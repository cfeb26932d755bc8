#include "random_problems.hpp"

#include "fpsr/linearization.hpp"
#include "fpsr/reduction.hpp"
#include "fpsr/series.hpp"

namespace fpsr::testing {

namespace {

Monomial monomial(std::size_t ny, unsigned p, const std::vector<std::pair<std::size_t, unsigned>>& ys) {
    Monomial m{p, std::vector<unsigned>(ny, 0)};
    for (auto [i, e] : ys) m.q[i] += e;
    return m;
}

}  // namespace

Rational ProblemGenerator::positive_rational() { return Rational(integer(1, 40), integer(1, 12)); }

UPoly ProblemGenerator::lbar(std::size_t n) {
    for (;;) {
        std::vector<Rational> c(n + 1);
        for (auto& x : c) x = integer(-4, 4);
        if (c[n].is_zero()) continue;
        UPoly p(c);
        if (k0_bound(p) == 0) return p;
    }
}

DeltaOp ProblemGenerator::delta_op(std::size_t n, long max_ord) {
    const auto trunc = static_cast<std::size_t>(max_ord + 2);
    std::vector<USeries> a;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i < n && integer(0, 4) == 0) {
            a.emplace_back(trunc);
            continue;
        }
        std::vector<Rational> c(trunc + 1);
        const auto v = static_cast<std::size_t>(integer(0, max_ord));
        for (std::size_t j = v; j <= trunc; ++j) c[j] = integer(-3, 3);
        if (c[v].is_zero()) c[v] = 1;
        a.emplace_back(std::move(c));
    }
    return DeltaOp(std::move(a));
}

RandomProblem ProblemGenerator::next() {
    for (;;) {
        RandomProblem rp;
        rp.n = static_cast<std::size_t>(integer(1, 2));
        rp.l = static_cast<std::size_t>(integer(0, 1));
        const std::size_t ny = rp.n + 1;
        const auto l = static_cast<unsigned>(rp.l);

        UPoly L = lbar(rp.n);
        rp.b.assign(L.coeffs().begin(), L.coeffs().end());
        rp.b.resize(rp.n + 1);

        MPoly F(ny);
        for (std::size_t i = 0; i <= rp.n; ++i) F.add_term(monomial(ny, l, {{i, 1}}), rp.b[i]);

        auto random_y = [&] { return static_cast<std::size_t>(integer(0, static_cast<long>(rp.n))); };
        // Q: z-free y-monomials of degree 2..3 - l
        const long q_terms = integer(0, 2);
        for (long t = 0; t < q_terms; ++t) {
            const auto deg = static_cast<unsigned>(integer(2, 3 - static_cast<long>(l)));
            std::vector<std::pair<std::size_t, unsigned>> ys;
            for (unsigned d = 0; d < deg; ++d) ys.emplace_back(random_y(), 1);
            F.add_term(monomial(ny, l, ys), integer(-3, 3));
        }
        // N: z^(l+1+p) y^q with total degree <= 3; the first term is y-free
        // so the solution is not identically zero
        const long n_terms = integer(1, 3);
        for (long t = 0; t < n_terms; ++t) {
            const long room = 3 - static_cast<long>(l) - 1;
            const auto p = static_cast<unsigned>(integer(0, room));
            const auto deg = t == 0 ? 0u : static_cast<unsigned>(integer(0, room - static_cast<long>(p)));
            std::vector<std::pair<std::size_t, unsigned>> ys;
            for (unsigned d = 0; d < deg; ++d) ys.emplace_back(random_y(), 1);
            F.add_term(monomial(ny, l + 1 + p, ys), t == 0 ? integer(1, 3) : integer(-3, 3));
        }
        rp.F = F;
        rp.prefix = solution_start(F, rp.l);
        if (rp.prefix.empty()) continue;
        return rp;
    }
}

std::vector<Rational> solution_start(const MPoly& F, std::size_t l) {
    const std::size_t n = F.order();
    std::vector<Rational> c{Rational(0)};
    for (std::size_t m = 1; m <= l + 1; ++m) {
        auto coeff_at = [&](const Rational& t) {
            c.push_back(t);
            const USeries phi = USeries::polynomial(c, m + l);
            c.pop_back();
            return substitute(F, jet(phi, n), m + l)[m + l];
        };
        const Rational intercept = coeff_at(0);
        const Rational slope = coeff_at(1) - intercept;
        if (slope.is_zero()) return {};
        c.push_back(-intercept / slope);
    }
    return {c.begin() + 1, c.end()};
}

}  // namespace fpsr::testing

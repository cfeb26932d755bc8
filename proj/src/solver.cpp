#include "fpsr/solver.hpp"

#include <algorithm>

#include "fpsr/errors.hpp"
#include "fpsr/linearization.hpp"
#include "online_eval.hpp"

namespace fpsr {

namespace {

Rational checked_divisor(const Reduction& red, std::size_t j) {
    Rational d = red.Lbar(Rational(static_cast<long>(j + red.k)));
    if (d.is_zero())
        throw Error(ErrorKind::resonance,
                    "Lbar(" + std::to_string(j + red.k) + ") = 0: coefficient c_" + std::to_string(j) +
                        " of the tail is not determined",
                    static_cast<long>(j));
    return d;
}

// sum over m_1 + ... + m_q = s, m_r >= 1, of prod (m_r)^i c_{m_r}
Rational power_sum(const std::vector<Rational>& c, unsigned i, unsigned q, std::size_t s) {
    if (q == 0) return s == 0 ? Rational(1) : Rational(0);
    Rational acc;
    for (std::size_t m = 1; m + (q - 1) <= s; ++m) {
        if (c[m].is_zero()) continue;
        Rational rest = power_sum(c, i, q - 1, s - m);
        if (rest.is_zero()) continue;
        acc += Rational(static_cast<long>(m)).pow(i) * c[m] * rest;
    }
    return acc;
}

// sum over j_idx + ... + j_n = s of prod_i power_sum(c, i, q_i, j_i), for i >= idx
Rational composition_sum(const std::vector<Rational>& c, const std::vector<unsigned>& q, std::size_t idx,
                         std::size_t s) {
    if (idx + 1 == q.size()) return power_sum(c, static_cast<unsigned>(idx), q[idx], s);
    Rational acc;
    for (std::size_t ji = 0; ji <= s; ++ji) {
        Rational head = power_sum(c, static_cast<unsigned>(idx), q[idx], ji);
        if (head.is_zero()) continue;
        acc += head * composition_sum(c, q, idx + 1, s - ji);
    }
    return acc;
}

}  // namespace

SolutionTail solve_substitution(const Reduction& red, std::size_t J) {
    const std::size_t ny = red.M.num_y();
    detail::OnlineEvaluator eval(red.M);
    SolutionTail tail{{}, red.k};
    tail.c.reserve(J);
    std::vector<Rational> inputs(ny);
    for (std::size_t j = 1; j <= J; ++j) {
        // coefficient j-1 of y_i = delta^i psi is (j-1)^i c_{j-1}
        const std::size_t m = j - 1;
        for (std::size_t i = 0; i < ny; ++i)
            inputs[i] = m == 0 ? Rational() : tail.c[m - 1] * Rational(static_cast<long>(m)).pow(static_cast<unsigned>(i));
        Rational rhs = eval.step(inputs);
        tail.c.push_back(rhs / checked_divisor(red, j));
    }
    return tail;
}

SolutionTail solve_explicit(const Reduction& red, std::size_t J) {
    SolutionTail tail{{}, red.k};
    std::vector<Rational> c(J + 1);  // c[0] = psi(0) = 0
    for (std::size_t j = 1; j <= J; ++j) {
        Rational rhs;
        for (const auto& [mono, alpha] : red.M.terms()) {
            if (mono.p + mono.y_degree() > j - 1) continue;
            rhs += alpha * composition_sum(c, mono.q, 0, j - 1 - mono.p);
        }
        c[j] = rhs / checked_divisor(red, j);
        tail.c.push_back(c[j]);
    }
    return tail;
}

USeries recombine(std::span<const Rational> prefix, std::size_t k, const SolutionTail& tail) {
    if (prefix.size() < k)
        throw Error(ErrorKind::insufficient_precision, "recombine: prefix shorter than k = " + std::to_string(k));
    std::vector<Rational> out(k + tail.size() + 1);
    for (std::size_t j = 1; j <= k; ++j) out[j] = prefix[j - 1];
    for (std::size_t j = 1; j <= tail.size(); ++j) out[k + j] = tail.c[j - 1];
    return USeries(std::move(out));
}

std::string ResidualOrder::str() const { return (exact ? "" : ">= ") + std::to_string(value); }

ResidualOrder residual_order(const MPoly& F, const USeries& phi) {
    const auto r = substitute(F, jet(phi, F.order()), phi.trunc());
    if (auto v = r.valuation()) return {*v, true};
    return {phi.trunc() + 1, false};
}

ResidualOrder polynomial_residual_order(const MPoly& F, std::span<const Rational> phi_coeffs, std::size_t through) {
    std::vector<Rational> c(std::max(through + 1, phi_coeffs.size()));
    std::copy(phi_coeffs.begin(), phi_coeffs.end(), c.begin());
    const auto r = substitute(F, jet(USeries(std::move(c)), F.order()), through);
    if (auto v = r.valuation()) return {*v, true};
    return {through + 1, false};
}

}  // namespace fpsr

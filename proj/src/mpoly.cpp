#include "fpsr/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "fpsr/errors.hpp"

namespace fpsr {

unsigned Monomial::y_degree() const { return std::accumulate(q.begin(), q.end(), 0U); }

MPoly MPoly::constant(std::size_t ny, const Rational& c) {
    MPoly out(ny);
    out.add_term(Monomial{0, std::vector<unsigned>(ny, 0)}, c);
    return out;
}

MPoly MPoly::z_power(std::size_t ny, unsigned p, const Rational& c) {
    MPoly out(ny);
    out.add_term(Monomial{p, std::vector<unsigned>(ny, 0)}, c);
    return out;
}

MPoly MPoly::y(std::size_t ny, std::size_t i) {
    if (i >= ny) throw Error(ErrorKind::invalid_argument, "variable index out of range");
    Monomial m{0, std::vector<unsigned>(ny, 0)};
    m.q[i] = 1;
    MPoly out(ny);
    out.add_term(m, 1);
    return out;
}

Rational MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.q.size() != ny_) throw Error(ErrorKind::invalid_argument, "monomial has the wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

unsigned MPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.p + m.y_degree());
    return d;
}

unsigned MPoly::max_y_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y_degree());
    return d;
}

unsigned MPoly::min_z_power() const {
    if (terms_.empty()) return 0;
    unsigned p = terms_.begin()->first.p;
    for (const auto& [m, c] : terms_) p = std::min(p, m.p);
    return p;
}

MPoly MPoly::with_num_y(std::size_t ny) const {
    MPoly out(ny);
    for (const auto& [m, c] : terms_) {
        Monomial k{m.p, std::vector<unsigned>(ny, 0)};
        for (std::size_t i = 0; i < m.q.size(); ++i) {
            if (i < ny) {
                k.q[i] = m.q[i];
            } else if (m.q[i] != 0) {
                throw Error(ErrorKind::invalid_argument, "variable y" + std::to_string(i) + " does not fit");
            }
        }
        out.add_term(k, c);
    }
    return out;
}

MPoly MPoly::divided_by_z_power(unsigned e) const {
    MPoly out(ny_);
    for (const auto& [m, c] : terms_) {
        if (m.p < e) throw Error(ErrorKind::internal_consistency, "polynomial is not divisible by z^" + std::to_string(e));
        out.terms_.emplace(Monomial{m.p - e, m.q}, c);
    }
    return out;
}

MPoly MPoly::times_z_power(unsigned e) const {
    MPoly out(ny_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.p + e, m.q}, c);
    return out;
}

MPoly MPoly::scaled(const Rational& c) const {
    MPoly out(ny_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result = constant(ny_, 1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str();
        if (m.p > 0) out += " * z^" + std::to_string(m.p);
        for (std::size_t i = 0; i < m.q.size(); ++i)
            if (m.q[i] > 0) out += " * y" + std::to_string(i) + "^" + std::to_string(m.q[i]);
    }
    return out;
}

void MPoly::check_compatible(const MPoly& o) const {
    if (o.ny_ != ny_) throw Error(ErrorKind::invalid_argument, "polynomials over different variable sets");
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly out(a.ny_);
    Monomial k{0, std::vector<unsigned>(a.ny_, 0)};
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            k.p = ma.p + mb.p;
            for (std::size_t i = 0; i < a.ny_; ++i) k.q[i] = ma.q[i] + mb.q[i];
            out.add_term(k, ca * cb);
        }
    }
    return out;
}

MPoly partial(const MPoly& f, std::size_t i) {
    if (i >= f.num_y()) throw Error(ErrorKind::invalid_argument, "partial: variable index out of range");
    MPoly out(f.num_y());
    for (const auto& [m, c] : f.terms()) {
        if (m.q[i] == 0) continue;
        Monomial k = m;
        --k.q[i];
        out.add_term(k, c * Rational(static_cast<long>(m.q[i])));
    }
    return out;
}

USeries substitute(const MPoly& f, std::span<const USeries> args, std::size_t z_trunc) {
    if (args.size() != f.num_y())
        throw Error(ErrorKind::invalid_argument, "substitute: expected " + std::to_string(f.num_y()) + " arguments");
    for (const auto& a : args)
        if (a.trunc() < z_trunc)
            throw Error(ErrorKind::insufficient_precision,
                        "substitute: argument known through z^" + std::to_string(a.trunc()) +
                            ", need z^" + std::to_string(z_trunc));

    // powers[i][e] = args[i]^e through z_trunc, filled on demand
    std::vector<std::vector<USeries>> powers(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        powers[i].push_back(USeries::monomial(1, 0, z_trunc));
        powers[i].push_back(args[i].truncated(z_trunc));
    }
    auto power = [&](std::size_t i, unsigned e) -> const USeries& {
        auto& ps = powers[i];
        while (ps.size() <= e) ps.push_back(mul_trunc(ps.back(), ps[1], z_trunc));
        return ps[e];
    };

    std::vector<Rational> acc(z_trunc + 1);
    for (const auto& [m, c] : f.terms()) {
        if (m.p > z_trunc) continue;
        USeries term = USeries::monomial(c, 0, z_trunc);
        for (std::size_t i = 0; i < m.q.size(); ++i)
            if (m.q[i] > 0) term = mul_trunc(term, power(i, m.q[i]), z_trunc);
        for (std::size_t j = 0; j + m.p <= z_trunc; ++j) acc[j + m.p] += term[j];
    }
    return USeries(std::move(acc));
}

Rational evaluate(const MPoly& f, const Rational& z, std::span<const Rational> y) {
    if (y.size() != f.num_y()) throw Error(ErrorKind::invalid_argument, "evaluate: wrong number of values");
    Rational acc;
    for (const auto& [m, c] : f.terms()) {
        Rational t = c * z.pow(m.p);
        for (std::size_t i = 0; i < m.q.size(); ++i)
            if (m.q[i] > 0) t *= y[i].pow(m.q[i]);
        acc += t;
    }
    return acc;
}

MPoly compose(const MPoly& f, std::span<const MPoly> ys) {
    if (ys.size() != f.num_y()) throw Error(ErrorKind::invalid_argument, "compose: wrong number of substitutions");
    std::size_t ny = ys.empty() ? 1 : ys.front().num_y();
    for (const auto& y : ys)
        if (y.num_y() != ny) throw Error(ErrorKind::invalid_argument, "compose: substitutions disagree on variables");

    std::vector<std::vector<MPoly>> powers(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) powers[i] = {MPoly::constant(ny, 1), ys[i]};
    auto power = [&](std::size_t i, unsigned e) -> const MPoly& {
        auto& ps = powers[i];
        while (ps.size() <= e) ps.push_back(ps.back() * ps[1]);
        return ps[e];
    };

    MPoly out(ny);
    for (const auto& [m, c] : f.terms()) {
        MPoly term = MPoly::z_power(ny, m.p, c);
        for (std::size_t i = 0; i < m.q.size(); ++i)
            if (m.q[i] > 0) term = term * power(i, m.q[i]);
        out += term;
    }
    return out;
}

}  // namespace fpsr

#include "online_eval.hpp"

#include <limits>

#include "fpsr/errors.hpp"
#include "kronecker.hpp"

namespace fpsr::detail {

namespace {
constexpr std::size_t kConstant = std::numeric_limits<std::size_t>::max();
}

OnlineEvaluator::OnlineEvaluator(const MPoly& poly) : inputs_(poly.num_y()) {
    for (std::size_t i = 0; i < inputs_; ++i) {
        Node leaf;
        leaf.leaf = true;
        leaf.input = i;
        std::vector<unsigned> q(inputs_, 0);
        q[i] = 1;
        by_exponent_.emplace(q, nodes_.size());
        nodes_.push_back(std::move(leaf));
    }
    for (const auto& [m, c] : poly.terms()) {
        std::size_t node = m.y_degree() == 0 ? kConstant : node_for(m.q);
        terms_.push_back({m.p, c, node});
    }
}

std::size_t OnlineEvaluator::node_for(const std::vector<unsigned>& q) {
    if (auto it = by_exponent_.find(q); it != by_exponent_.end()) return it->second;
    std::size_t last = q.size();
    while (q[last - 1] == 0) --last;
    std::vector<unsigned> rest = q;
    --rest[last - 1];
    std::vector<unsigned> unit(q.size(), 0);
    unit[last - 1] = 1;
    const std::size_t a = node_for(rest);
    const std::size_t b = by_exponent_.at(unit);
    const std::size_t id = product(a, b);
    by_exponent_.emplace(q, id);
    return id;
}

std::size_t OnlineEvaluator::product(std::size_t a, std::size_t b) {
    if (auto it = by_pair_.find({a, b}); it != by_pair_.end()) return it->second;
    Node node;
    node.lhs = a;
    node.rhs = b;
    node.degree = nodes_[a].degree + nodes_[b].degree;
    nodes_.push_back(std::move(node));
    by_pair_.emplace(std::pair{a, b}, nodes_.size() - 1);
    return nodes_.size() - 1;
}

void OnlineEvaluator::add_blocks(Node& node, std::size_t m) {
    // Square [s0, s0 + p) x [t0, t0 + p) of the (lhs, rhs) index plane is
    // added at step max(s0, t0) + p - 1 and only touches coefficients from
    // s0 + t0 on. With p = 2^e the diagonal squares start at p - 1 and the
    // others pair the band [p - 1, 2p - 1) with [m + 1 - p, m + 1).
    if (node.acc.size() < 2 * m + 2) node.acc.resize(2 * m + 2);
    const std::span<const mpz_class> a = nodes_[node.lhs].c;
    const std::span<const mpz_class> b = nodes_[node.rhs].c;
    const std::size_t n = m + 2;
    for (std::size_t p = 1; n % p == 0 && 2 * p <= n; p *= 2) {
        if (n == 2 * p) {
            block_addmul(node.acc, 2 * (p - 1), a.subspan(p - 1, p), b.subspan(p - 1, p));
        } else {
            block_addmul(node.acc, m, a.subspan(m + 1 - p, p), b.subspan(p - 1, p));
            block_addmul(node.acc, m, a.subspan(p - 1, p), b.subspan(m + 1 - p, p));
        }
    }
}

Rational OnlineEvaluator::step(const std::vector<Rational>& input_coeffs) {
    if (input_coeffs.size() != inputs_) throw Error(ErrorKind::invalid_argument, "online evaluator: wrong input count");
    const std::size_t m = m_++;
    if (m == 0)
        for (const auto& c : input_coeffs)
            if (!c.is_zero()) throw Error(ErrorKind::invalid_argument, "online evaluator: inputs need zero constant term");

    mpz_class grown = den_;
    for (const auto& c : input_coeffs)
        if (!c.is_zero()) mpz_lcm(grown.get_mpz_t(), grown.get_mpz_t(), c.mpq().get_den_mpz_t());
    if (grown != den_) {
        const mpz_class scale = grown / den_;
        std::vector<mpz_class> scale_pow{1, scale};
        for (auto& node : nodes_) {
            while (scale_pow.size() <= node.degree) scale_pow.push_back(scale_pow.back() * scale);
            for (auto* v : {&node.c, &node.acc})
                for (auto& x : *v)
                    if (sgn(x) != 0) x *= scale_pow[node.degree];
        }
        den_ = grown;
    }

    for (auto& node : nodes_) {
        mpz_class value;
        if (node.leaf) {
            const Rational& x = input_coeffs[node.input];
            if (!x.is_zero()) {
                mpz_divexact(value.get_mpz_t(), den_.get_mpz_t(), x.mpq().get_den_mpz_t());
                value *= x.mpq().get_num();
            }
        } else {
            add_blocks(node, m);
            value = std::move(node.acc[m]);
        }
        node.c.push_back(std::move(value));
    }

    std::vector<mpz_class> den_pow{1};
    Rational out;
    for (const auto& term : terms_) {
        if (m < term.p) continue;
        if (term.node == kConstant) {
            if (m == term.p) out += term.coeff;
        } else {
            const Node& node = nodes_[term.node];
            const auto& c = node.c[m - term.p];
            if (sgn(c) == 0) continue;
            while (den_pow.size() <= node.degree) den_pow.push_back(den_pow.back() * den_);
            out.add_product(term.coeff, Rational(c, den_pow[node.degree]));
        }
    }
    return out;
}

}  // namespace fpsr::detail

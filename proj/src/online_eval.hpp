#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "fpsr/mpoly.hpp"
#include "fpsr/rational.hpp"

namespace fpsr::detail {

// Evaluates P(z, s_0(z), ..., s_n(z)) one coefficient at a time while the
// input series s_i are still being discovered. Coefficient m of the result
// needs only coefficients 0..m of the inputs. Every y-monomial is a chain of
// cached product nodes. Products are relaxed: once coefficient m of both
// factors is known, square blocks of the product plane that become complete
// are multiplied at once into `acc`, so a run of J steps costs O(M(J) log J)
// per node instead of O(J^2).
//
// Node coefficients are integers over D^degree, D being the lcm of every
// input denominator seen so far; when D grows the stored numerators are
// rescaled. Products then need no gcds.
//
// All inputs must have zero constant term.
class OnlineEvaluator {
public:
    explicit OnlineEvaluator(const MPoly& poly);

    std::size_t num_inputs() const { return inputs_; }

    // Supplies coefficient m (= number of coefficients supplied so far) of
    // every input, then returns coefficient m of the polynomial.
    Rational step(const std::vector<Rational>& input_coeffs);

private:
    struct Node {
        // leaf: input index; product: two child node indices
        bool leaf = false;
        std::size_t input = 0;
        std::size_t lhs = 0;
        std::size_t rhs = 0;
        unsigned degree = 1;
        std::vector<mpz_class> c;
        // contributions to coefficients not yet emitted
        std::vector<mpz_class> acc;
    };

    void add_blocks(Node& node, std::size_t m);
    std::size_t node_for(const std::vector<unsigned>& q);
    std::size_t product(std::size_t a, std::size_t b);

    std::size_t inputs_;
    std::vector<Node> nodes_;
    std::map<std::vector<unsigned>, std::size_t> by_exponent_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_pair_;
    // (z power, coefficient, node or npos for the constant monomial)
    struct Term {
        unsigned p;
        Rational coeff;
        std::size_t node;
    };
    std::vector<Term> terms_;
    std::size_t m_ = 0;
    mpz_class den_ = 1;
};

}  // namespace fpsr::detail

#include "kronecker.hpp"

#include <algorithm>

namespace fpsr::detail {

namespace {

std::size_t max_bits(std::span<const mpz_class> a) {
    std::size_t bits = 0;
    for (const auto& x : a)
        if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    return bits;
}

mpz_class pack(std::span<const mpz_class> a, std::size_t w) {
    if (a.size() == 1) return a[0];
    const std::size_t mid = a.size() / 2;
    mpz_class hi = pack(a.subspan(mid), w);
    mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), w * mid);
    return hi + pack(a.first(mid), w);
}

// Balanced residue of x modulo 2^bits, in [-2^(bits-1), 2^(bits-1)).
mpz_class balanced_low(const mpz_class& x, std::size_t bits) {
    mpz_class low;
    mpz_fdiv_r_2exp(low.get_mpz_t(), x.get_mpz_t(), bits);
    if (mpz_tstbit(low.get_mpz_t(), bits - 1)) {
        mpz_class full;
        mpz_setbit(full.get_mpz_t(), bits);
        low -= full;
    }
    return low;
}

void unpack(const mpz_class& p, std::size_t count, std::size_t w, mpz_class* out) {
    if (count == 1) {
        *out += p;
        return;
    }
    const std::size_t half = count / 2;
    const mpz_class low = balanced_low(p, w * half);
    mpz_class high = p - low;
    mpz_fdiv_q_2exp(high.get_mpz_t(), high.get_mpz_t(), w * half);
    unpack(low, half, w, out);
    unpack(high, count - half, w, out + half);
}

std::span<const mpz_class> trim(std::span<const mpz_class> a) {
    while (!a.empty() && sgn(a.back()) == 0) a = a.first(a.size() - 1);
    return a;
}

}  // namespace

void kronecker_addmul(std::vector<mpz_class>& out, std::size_t offset, std::span<const mpz_class> a,
                      std::span<const mpz_class> b) {
    if (offset >= out.size()) return;
    const std::size_t room = out.size() - offset;
    a = trim(a.first(std::min(a.size(), room)));
    b = trim(b.first(std::min(b.size(), room)));
    if (a.empty() || b.empty()) return;

    std::size_t terms = 1;
    for (std::size_t n = std::min(a.size(), b.size()); n > 0; n >>= 1) ++terms;
    const std::size_t w = max_bits(a) + max_bits(b) + terms + 1;

    mpz_class p = pack(a, w) * pack(b, w);
    const std::size_t count = std::min(room, a.size() + b.size() - 1);
    if (count < a.size() + b.size() - 1) p = balanced_low(p, w * count);
    unpack(p, count, w, out.data() + offset);
}

void block_addmul(std::vector<mpz_class>& out, std::size_t offset, std::span<const mpz_class> a,
                  std::span<const mpz_class> b) {
    if (std::min(a.size(), b.size()) >= kKroneckerThreshold) {
        kronecker_addmul(out, offset, a, b);
        return;
    }
    for (std::size_t i = 0; i < a.size() && offset + i < out.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size() && offset + i + j < out.size(); ++j)
            if (sgn(b[j]) != 0) mpz_addmul(out[offset + i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

}  // namespace fpsr::detail

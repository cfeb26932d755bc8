#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace fpsr::detail {

// Blocks at least this long go through kronecker_addmul; shorter ones are
// multiplied term by term.
inline constexpr std::size_t kKroneckerThreshold = 12;

// out[offset + i] += [x^i] a(x) b(x) for i < out.size() - offset. Both
// polynomials are packed into single integers at a power of two wide enough
// to hold every product coefficient, multiplied once and unpacked.
void kronecker_addmul(std::vector<mpz_class>& out, std::size_t offset, std::span<const mpz_class> a,
                      std::span<const mpz_class> b);

// Same contract, picking term-by-term or packed multiplication by length.
void block_addmul(std::vector<mpz_class>& out, std::size_t offset, std::span<const mpz_class> a,
                  std::span<const mpz_class> b);

}  // namespace fpsr::detail

#pragma once

#include <hdet/arith.hpp>
#include <hdet/integer.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hdet {

namespace detail {

// Legendre symbols of 0..p-1 in O(p) by marking the squares, instead of
// p separate Euler-criterion exponentiations. Used by the identity sums,
// which are evaluated many times in property sweeps.
inline std::vector<int> legendre_table(std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::domain_error("legendre_table: p must be an odd prime");
    std::vector<int> table(static_cast<std::size_t>(p), -1);
    table[0] = 0;
    for (std::int64_t m = 1; m <= (p - 1) / 2; ++m)
        table[static_cast<std::size_t>((m * m) % p)] = 1;
    return table;
}

}  // namespace detail

// Sum_{k=0}^{p-1} (i+k / p)(j+k / p): the orthogonality sum, p-1 when
// i = j (mod p) and -1 otherwise.
inline Int orthogonality(std::int64_t p, std::int64_t i, std::int64_t j) {
    const auto table = detail::legendre_table(p);
    const std::int64_t i0 = mod_floor(i, p).convert_to<std::int64_t>();
    const std::int64_t j0 = mod_floor(j, p).convert_to<std::int64_t>();
    Int sum = 0;
    for (std::int64_t k = 0; k < p; ++k)
        sum += table[static_cast<std::size_t>((i0 + k) % p)] * table[static_cast<std::size_t>((j0 + k) % p)];
    return sum;
}

// Sum_{j=0}^{p-1} (i+j / p)(j / p) for p not dividing i; always -1.
inline Int shifted_product_sum(std::int64_t p, std::int64_t i) {
    const auto table = detail::legendre_table(p);
    const std::int64_t i0 = mod_floor(i, p).convert_to<std::int64_t>();
    if (i0 == 0) throw std::domain_error("shifted_product_sum: requires p not dividing i");
    Int sum = 0;
    for (std::int64_t j = 0; j < p; ++j)
        sum += table[static_cast<std::size_t>((i0 + j) % p)] * table[static_cast<std::size_t>(j)];
    return sum;
}

// Sum over the nonresidues j mod p of (i+j / p), for p not dividing i.
// Equals 0 when i is a residue and 1 when i is a nonresidue, i.e.
// (1 - (i/p))/2.
inline Int nonresidue_row_sum(std::int64_t p, std::int64_t i) {
    const auto table = detail::legendre_table(p);
    const std::int64_t i0 = mod_floor(i, p).convert_to<std::int64_t>();
    if (i0 == 0) throw std::domain_error("nonresidue_row_sum: requires p not dividing i");
    Int sum = 0;
    for (std::int64_t j = 1; j < p; ++j)
        if (table[static_cast<std::size_t>(j)] == -1) sum += table[static_cast<std::size_t>((i0 + j) % p)];
    return sum;
}

// Sum_{m=1}^{p-1} m (m/p). Zero for every prime p = 1 (mod 4); for
// p = 3 (mod 4) the (nonzero) value is returned without any assertion.
inline Int weighted_residue_sum(std::int64_t p) {
    const auto table = detail::legendre_table(p);
    Int sum = 0;
    for (std::int64_t m = 1; m < p; ++m) sum += Int(m) * table[static_cast<std::size_t>(m)];
    return sum;
}

// For p = 1 (mod 4): checks that
//   Sum_{m=1}^{(p-1)/2} (2m-1 / p) = -(-1)^((p^2-1)/8) Sum_{m=1}^{(p-1)/2} (m/p)
// and that both sides vanish.
inline bool alternating_sum_check(std::int64_t p) {
    if (p % 4 != 1) throw std::domain_error("alternating_sum_check: requires p = 1 (mod 4)");
    const auto table = detail::legendre_table(p);
    Int odd_sum = 0, half_sum = 0;
    for (std::int64_t m = 1; m <= (p - 1) / 2; ++m) {
        odd_sum += table[static_cast<std::size_t>((2 * m - 1) % p)];
        half_sum += table[static_cast<std::size_t>(m)];
    }
    const int sign = (((p * p - 1) / 8) % 2 == 0) ? 1 : -1;
    return odd_sum == -sign * half_sum && odd_sum == 0 && half_sum == 0;
}

// The closing transform identity for a p-periodic function given by its
// values F(0..p-1):
//   Sum_j F(j) + Sum_j (j/p) F(j) = Sum_j F(j^2 mod p).
// Exact over integer or rational values.
template <typename T>
inline bool f_transform_check(std::int64_t p, const std::vector<T>& f) {
    const auto table = detail::legendre_table(p);
    if (f.size() != static_cast<std::size_t>(p))
        throw std::invalid_argument("f_transform_check: F must list the p values F(0..p-1)");
    T lhs{};
    for (std::int64_t j = 0; j < p; ++j) {
        lhs += f[static_cast<std::size_t>(j)];
        if (table[static_cast<std::size_t>(j)] == 1)
            lhs += f[static_cast<std::size_t>(j)];
        else if (table[static_cast<std::size_t>(j)] == -1)
            lhs -= f[static_cast<std::size_t>(j)];
    }
    T rhs{};
    for (std::int64_t j = 0; j < p; ++j) rhs += f[static_cast<std::size_t>((j * j) % p)];
    return lhs == rhs;
}

}  // namespace hdet

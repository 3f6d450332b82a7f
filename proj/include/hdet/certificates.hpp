#pragma once

#include <hdet/arith.hpp>
#include <hdet/hankel.hpp>
#include <hdet/poly.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace hdet {

// n = m^2: the rows 1, 2, m+1, m+2 of the Hankel matrix are linearly
// dependent over Z[x].
struct SquareCase {
    std::int64_t m;
};

// n = p^(2e+1) q with p prime, gcd(p, q) = 1: the rows iq+1, iq+2 for
// i = 0..p-1 are linearly dependent over Z[x].
struct OddPowerCase {
    std::int64_t p;
    unsigned e;
    std::int64_t q;
};

// Explicit row dependence sum(coeff_t * row_t) = 0 witnessing that H_n
// vanishes identically for odd composite n. Row indices are 1-based.
struct CompositeCertificate {
    std::int64_t n;
    std::variant<SquareCase, OddPowerCase> kind;
    std::vector<std::pair<std::int64_t, IntPoly>> dependence;
};

// Builds the canonical certificate for an odd composite n >= 9. A perfect
// square always takes the square dependence; otherwise the smallest prime
// with odd exponent in n determines the prime-power dependence.
inline CompositeCertificate composite_certificate(std::int64_t n) {
    if (n % 2 == 0) throw std::domain_error("composite_certificate: n must be odd");
    if (n < 9 || is_prime(n)) throw std::domain_error("composite_certificate: n must be composite (n >= 9)");

    const IntPoly one(1);
    const IntPoly minus_x = IntPoly::monomial(1, -1);
    const IntPoly x = IntPoly::monomial(1);

    CompositeCertificate cert;
    cert.n = n;
    const Factorization f = factorize(n);
    if (f.is_perfect_square()) {
        Int m = 1;
        for (const auto& pp : f.factors) m *= pow_int(pp.prime, pp.exponent / 2);
        const auto m64 = m.convert_to<std::int64_t>();
        cert.kind = SquareCase{m64};
        // r_2 - x r_1 - r_{m+2} + x r_{m+1} = 0; m+2 <= m^2 holds for m >= 2
        cert.dependence = {{2, one}, {1, minus_x}, {m64 + 2, IntPoly(-1)}, {m64 + 1, x}};
    } else {
        const PrimePower* chosen = nullptr;
        for (const auto& pp : f.factors) {
            if (pp.exponent % 2 != 0) {
                chosen = &pp;
                break;  // factors ascend, so this is the smallest qualifying prime
            }
        }
        const auto p = chosen->prime.convert_to<std::int64_t>();
        const unsigned e = (chosen->exponent - 1) / 2;
        const std::int64_t q = (Int(n) / pow_int(chosen->prime, chosen->exponent)).convert_to<std::int64_t>();
        cert.kind = OddPowerCase{p, e, q};
        // Largest row index used is (p-1)q + 2 <= n: for q >= 2 because
        // (p-1)q + 2 <= pq - q + 2 <= pq <= n, and for q = 1 because then
        // n = p^(2e+1) with e >= 1 (n composite), so p + 1 <= p^3 <= n.
        for (std::int64_t i = 0; i < p; ++i) {
            cert.dependence.emplace_back(i * q + 2, one);
            cert.dependence.emplace_back(i * q + 1, minus_x);
        }
    }
    return cert;
}

// Checks a certificate against the actual Hankel rows: forms
// sum(coeff_t * (a_{r_t}, ..., a_{r_t + n - 1})) in Z[x]^n and returns
// true iff it is identically zero. Entirely independent of any
// determinant computation. Malformed row indices throw.
inline bool verify_certificate(const CompositeCertificate& cert) {
    const std::int64_t n = cert.n;
    if (n < 3 || n % 2 == 0) throw std::domain_error("verify_certificate: certificate n must be odd and >= 3");
    for (const auto& [row, coeff] : cert.dependence) {
        if (row < 1 || row > n)
            throw std::out_of_range("verify_certificate: row index " + std::to_string(row) +
                                    " outside 1.." + std::to_string(n));
    }
    // J(0..2n-1, n) once, then every a_k is a prefix-reversed slice
    std::vector<Int> jt(static_cast<std::size_t>(2 * n));
    for (std::int64_t t = 0; t < 2 * n; ++t)
        jt[static_cast<std::size_t>(t)] = jacobi(t, n).value();
    std::vector<IntPoly> a(static_cast<std::size_t>(2 * n));  // a[k] = a_k, k = 1..2n-1
    for (std::int64_t k = 1; k <= 2 * n - 1; ++k) {
        std::vector<Int> coeffs(static_cast<std::size_t>(k) + 1);
        for (std::int64_t m = 0; m <= k; ++m) coeffs[static_cast<std::size_t>(m)] = jt[static_cast<std::size_t>(k - m)];
        a[static_cast<std::size_t>(k)] = IntPoly(std::move(coeffs));
    }
    for (std::int64_t j = 0; j < n; ++j) {
        IntPoly acc;
        for (const auto& [row, coeff] : cert.dependence)
            acc += coeff * a[static_cast<std::size_t>(row + j)];
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace hdet

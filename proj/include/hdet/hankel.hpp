#pragma once

#include <hdet/arith.hpp>
#include <hdet/integer.hpp>
#include <hdet/linalg.hpp>
#include <hdet/poly.hpp>

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hdet {

// a_k(x) = sum_{m=0}^{k} J(k-m, n) x^m for odd n. For n > 1 the x^k term
// has J(0, n) = 0 and the x^(k-1) term has J(1, n) = 1, so a_k is monic of
// degree k-1 with constant term J(k, n).
inline IntPoly a_poly(std::int64_t k, std::int64_t n) {
    if (k < 1) throw std::domain_error("a_poly: k must be >= 1");
    if (n < 1 || n % 2 == 0) throw std::domain_error("a_poly: n must be odd and positive");
    std::vector<Int> coeffs(static_cast<std::size_t>(k) + 1);
    for (std::int64_t m = 0; m <= k; ++m)
        coeffs[static_cast<std::size_t>(m)] = jacobi(k - m, n).value();
    return IntPoly(std::move(coeffs));
}

// The n x n Hankel matrix [a_{i+j-1}(x)] whose determinant is H_n(x).
struct HankelInstance {
    std::int64_t n;
    RingMatrix<IntPoly> matrix;
};

inline HankelInstance build_hankel(std::int64_t n) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("build_hankel: n must be odd and >= 3");
    const auto un = static_cast<std::size_t>(n);
    // anti-diagonal structure: entry (i,j) depends only on i+j
    std::vector<IntPoly> a;
    a.reserve(2 * un);
    for (std::int64_t k = 1; k <= 2 * n - 1; ++k) a.push_back(a_poly(k, n));
    RingMatrix<IntPoly> m = RingMatrix<IntPoly>::build(
        un, un, [&a](std::size_t i, std::size_t j) { return a[i + j - 2]; });
    return HankelInstance{n, std::move(m)};
}

// H_n(x) as the fraction-free determinant over Z[x]; the reference path.
inline IntPoly det_direct(const HankelInstance& inst) {
    return bareiss_det(inst.matrix);
}

namespace detail {

// Integer matrix [a_{i+j-1}(t)] for a fixed evaluation point t.
inline RingMatrix<Int> hankel_at(std::int64_t n, const Int& t) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<Int> vals;
    vals.reserve(2 * un);
    for (std::int64_t k = 1; k <= 2 * n - 1; ++k) vals.push_back(a_poly(k, n)(t));
    return RingMatrix<Int>::build(un, un,
                                  [&vals](std::size_t i, std::size_t j) { return vals[i + j - 2]; });
}

template <typename Fn>
inline void parallel_for(std::size_t count, unsigned threads, Fn&& body) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    };
    std::vector<std::thread> pool;
    const unsigned spawn = std::min<unsigned>(threads, static_cast<unsigned>(count));
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace detail

// H_n(x) by evaluation-interpolation: integer determinants of
// [a_{i+j-1}(t)] at the 2n-1 nodes t = -(n-1)..(n-1), then exact Lagrange
// interpolation. The node count covers the a-priori degree bound 2n-2
// (row reduction bounds deg H_n by deg a_{2n-1} = 2n-2) without assuming
// the sharper prime-case degree n-1, so this path is an independent check
// of the closed form. Node evaluations are independent; threads > 1 runs
// them concurrently with a deterministic result.
inline IntPoly det_interp(std::int64_t n, unsigned threads = 1) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("det_interp: n must be odd and >= 3");
    const std::size_t count = static_cast<std::size_t>(2 * n - 1);
    std::vector<std::pair<Int, Int>> points(count);
    detail::parallel_for(count, threads, [n, &points](std::size_t idx) {
        const Int t = Int(static_cast<std::int64_t>(idx)) - (n - 1);
        points[idx] = {t, bareiss_det(detail::hankel_at(n, t))};
    });
    return lagrange_interpolate(points);
}

// Partial sums b_k = sum_{i=1}^{p-k} (i/p) for k = 0..p-1; the coefficient
// vector of the prime-case determinant up to the leading scalar.
struct PartialSumVector {
    std::int64_t p;
    std::vector<std::int64_t> b;
};

inline PartialSumVector partial_sums(std::int64_t p) {
    if (!is_prime(p) || p == 2) throw std::domain_error("partial_sums: p must be an odd prime");
    PartialSumVector v{p, std::vector<std::int64_t>(static_cast<std::size_t>(p), 0)};
    // b_{k} = b_{k+1} + (p-k / p), accumulated from the short end
    std::int64_t acc = 0;
    for (std::int64_t k = p - 1; k >= 0; --k) {
        acc += legendre(p - k, p).value();
        v.b[static_cast<std::size_t>(k)] = acc;
    }
    return v;
}

// Closed-form H_p(x) = (-1)^((p-1)/2) p^((p-3)/2) sum_k b_k x^k for an odd
// prime p; O(p) symbol evaluations, no determinant.
inline IntPoly closed_form(std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::domain_error("closed_form: requires an odd prime; for odd composite n the "
                                "determinant vanishes identically (see composite_certificate)");
    const PartialSumVector v = partial_sums(p);
    Int scale = pow_int(p, static_cast<std::uint64_t>((p - 3) / 2));
    if ((p - 1) / 2 % 2 != 0) scale = -scale;
    std::vector<Int> coeffs(static_cast<std::size_t>(p));
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = scale * v.b[k];
    return IntPoly(std::move(coeffs));
}

// Divisibility structure of H_p(x): x^2 always divides; x^2(x^2-1)
// divides when p = 1 (mod 4). reduced_coeffs holds the quotient of H_p by
// the leading scalar and x^2 (p = 3 mod 4) or x^2(x^2-1) (p = 1 mod 4);
// in the first case those coefficients provably equal b_{k+2} and
// b_shift_ok records the comparison, in the second they are reported
// without assertion.
struct DivisibilityReport {
    std::int64_t p;
    IntPoly h;
    IntPoly quotient_x2;                      // H_p / x^2
    std::optional<IntPoly> quotient_x2_x2m1;  // H_p / (x^2 (x^2 - 1)), p = 1 mod 4
    std::vector<Int> reduced_coeffs;
    std::optional<bool> b_shift_ok;
};

inline DivisibilityReport divisibility_report(std::int64_t p) {
    if (!is_prime(p) || p == 2) throw std::domain_error("divisibility_report: p must be an odd prime");
    DivisibilityReport rep;
    rep.p = p;
    rep.h = closed_form(p);
    const IntPoly x2 = IntPoly::monomial(2);
    rep.quotient_x2 = divexact(rep.h, x2);

    Int scale = pow_int(p, static_cast<std::uint64_t>((p - 3) / 2));
    if ((p - 1) / 2 % 2 != 0) scale = -scale;

    if (p % 4 == 1) {
        const IntPoly x2m1{-1, 0, 1};
        rep.quotient_x2_x2m1 = divexact(rep.quotient_x2, x2m1);
        for (const Int& c : rep.quotient_x2_x2m1->coeffs())
            rep.reduced_coeffs.push_back(ring_traits<Int>::divexact(c, scale));
    } else {
        const PartialSumVector v = partial_sums(p);
        bool ok = true;
        for (std::size_t k = 0; k < rep.quotient_x2.coeffs().size(); ++k) {
            const Int c = ring_traits<Int>::divexact(rep.quotient_x2.coeff(k), scale);
            rep.reduced_coeffs.push_back(c);
            if (c != v.b[k + 2]) ok = false;
        }
        if (rep.quotient_x2.coeffs().size() != static_cast<std::size_t>(p - 2)) ok = false;
        rep.b_shift_ok = ok;
    }
    return rep;
}

}  // namespace hdet

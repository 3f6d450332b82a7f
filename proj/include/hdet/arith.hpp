#pragma once

#include <hdet/integer.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hdet {

// Value of a Legendre/Jacobi symbol: one of -1, 0, +1.
class Symbol {
public:
    constexpr Symbol() noexcept : v_(0) {}
    constexpr explicit Symbol(int v) : v_(v) {
        if (v < -1 || v > 1) throw std::domain_error("Symbol: value must be -1, 0 or 1");
    }

    constexpr int value() const noexcept { return v_; }
    constexpr operator int() const noexcept { return v_; }

    friend constexpr Symbol operator*(Symbol a, Symbol b) noexcept {
        Symbol s;
        s.v_ = a.v_ * b.v_;
        return s;
    }
    friend constexpr Symbol operator-(Symbol a) noexcept {
        Symbol s;
        s.v_ = -a.v_;
        return s;
    }
    friend constexpr bool operator==(Symbol a, Symbol b) noexcept { return a.v_ == b.v_; }

private:
    int v_;
};

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

// Complete prime factorization, primes strictly increasing.
struct Factorization {
    std::vector<PrimePower> factors;

    Int value() const {
        Int v = 1;
        for (const auto& f : factors) v *= pow_int(f.prime, f.exponent);
        return v;
    }

    unsigned exponent_of(const Int& p) const {
        for (const auto& f : factors)
            if (f.prime == p) return f.exponent;
        return 0;
    }

    bool is_perfect_square() const {
        for (const auto& f : factors)
            if (f.exponent % 2 != 0) return false;
        return true;
    }

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.factors == b.factors;
    }
};

namespace detail {

inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned s) {
    Int x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace detail

// Deterministic Miller-Rabin; the fixed base set decides primality
// correctly for all n < 3.317e24 (Sorenson & Webster), far beyond the
// ranges this library works at.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    static constexpr std::array<int, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int b : bases) {
        if (n % b == 0) return n == b;
    }
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int b : bases)
        if (detail::miller_rabin_witness(n, b, d, s)) return false;
    return true;
}

// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
// Primality of p is a caller responsibility; oddness is enforced, and a
// residue a^((p-1)/2) outside {0, 1, p-1} exposes a composite p.
inline Symbol legendre(const Int& a, const Int& p) {
    if (p < 3 || (p & 1) == 0) throw std::domain_error("legendre: modulus must be an odd prime");
    Int t = pow_mod(a, (p - 1) >> 1, p);
    if (t == 0) return Symbol(0);
    if (t == 1) return Symbol(1);
    if (t == p - 1) return Symbol(-1);
    throw std::domain_error("legendre: modulus is not prime");
}

// Jacobi symbol J(a, m) for odd m >= 1, via quadratic reciprocity.
// No factorization of m is performed.
inline Symbol jacobi(Int a, Int m) {
    if (m <= 0 || (m & 1) == 0) throw std::domain_error("jacobi: modulus must be odd and positive");
    a = mod_floor(a, m);
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            Int r = m & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, m);
        if ((a & 3) == 3 && (m & 3) == 3) t = -t;
        a %= m;
    }
    return m == 1 ? Symbol(t) : Symbol(0);
}

namespace detail {

// Pollard rho (Brent's cycle detection); n odd composite, not a prime
// power of a tiny prime. The polynomial offset c advances deterministically
// until a factor splits off.
inline Int pollard_rho(const Int& n) {
    if ((n & 1) == 0) return 2;
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1;
        Int ys = y;
        const unsigned m = 128;
        unsigned long r = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < m && i < r - k; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

inline void factor_into(Int n, std::vector<std::pair<Int, unsigned>>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// Complete deterministic factorization of n >= 1: trial division below
// 10^4, then Pollard rho on what remains.
inline Factorization factorize(Int n) {
    if (n < 1) throw std::domain_error("factorize: argument must be positive");
    Factorization result;
    auto push = [&result](const Int& p, unsigned e) {
        if (!result.factors.empty() && result.factors.back().prime == p)
            result.factors.back().exponent += e;
        else
            result.factors.push_back({p, e});
    };
    for (Int d = 2; d < 10000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) push(d, e);
    }
    if (n > 1) {
        if (is_prime(n)) {
            push(n, 1);
        } else {
            std::vector<std::pair<Int, unsigned>> rest;
            detail::factor_into(n, rest);
            std::sort(rest.begin(), rest.end());
            for (const auto& [p, e] : rest) push(p, e);
        }
    }
    return result;
}

// Smallest generator of (Z/pZ)^* for an odd prime p, certified by checking
// g^((p-1)/q) != 1 for every prime q dividing p-1.
inline Int primitive_root(const Int& p) {
    if (!is_prime(p) || p == 2) throw std::domain_error("primitive_root: argument must be an odd prime");
    const Factorization f = factorize(p - 1);
    for (Int g = 2; g < p; ++g) {
        bool generates = true;
        for (const auto& q : f.factors) {
            if (pow_mod(g, (p - 1) / q.prime, p) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    throw std::logic_error("primitive_root: no generator found");  // unreachable for prime p
}

}  // namespace hdet

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hdet {

// Arbitrary-precision integers and rationals used throughout the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::gcd;

// a mod m normalized into [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int pow_mod(Int base, Int exp, const Int& m) {
    base = mod_floor(base, m);
    Int result = 1;
    while (exp > 0) {
        if ((exp & 1) != 0) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

// base^exp with exp >= 0.
inline Int pow_int(const Int& base, std::uint64_t exp) {
    Int result = 1, b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

// Floor of sqrt(n), n >= 0 (Newton iteration).
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    if (n < 2) return n;
    Int x = Int(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / 2 + 1);
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace hdet

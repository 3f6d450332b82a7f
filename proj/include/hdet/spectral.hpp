#pragma once

#include <hdet/arith.hpp>
#include <hdet/cyclo.hpp>
#include <hdet/integer.hpp>
#include <hdet/linalg.hpp>
#include <hdet/poly.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hdet {

namespace detail {

inline void require_odd_prime(std::int64_t p, const char* where) {
    if (p < 3 || !is_prime(p)) throw std::domain_error(std::string(where) + ": p must be an odd prime");
}

}  // namespace detail

// The four Legendre-symbol matrices. Indices are 1-based as displayed:
//   A_p = [(i+j-1 / p)]  (p x p),    C_p = [(i+j / p)]  (p-1 x p-1),
//   B_p = [(i-j / p)]    (p-1 x p-1), D_p = [(i-j / p)]  (p x p).
inline RingMatrix<Int> build_A(std::int64_t p) {
    detail::require_odd_prime(p, "build_A");
    return RingMatrix<Int>::build(p, p, [p](std::size_t i, std::size_t j) {
        return Int(legendre(static_cast<std::int64_t>(i + j) - 1, p).value());
    });
}

inline RingMatrix<Int> build_C(std::int64_t p) {
    detail::require_odd_prime(p, "build_C");
    return RingMatrix<Int>::build(p - 1, p - 1, [p](std::size_t i, std::size_t j) {
        return Int(legendre(static_cast<std::int64_t>(i + j), p).value());
    });
}

inline RingMatrix<Int> build_B(std::int64_t p) {
    detail::require_odd_prime(p, "build_B");
    return RingMatrix<Int>::build(p - 1, p - 1, [p](std::size_t i, std::size_t j) {
        return Int(legendre(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j), p).value());
    });
}

inline RingMatrix<Int> build_D(std::int64_t p) {
    detail::require_odd_prime(p, "build_D");
    return RingMatrix<Int>::build(p, p, [p](std::size_t i, std::size_t j) {
        return Int(legendre(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j), p).value());
    });
}

// All p^2 cofactors of A_p computed exhaustively; true iff they are
// pairwise equal and equal to det C_p. O(p^2) determinants of size p-1,
// so meant for small p.
inline bool cofactors_all_equal(std::int64_t p) {
    detail::require_odd_prime(p, "cofactors_all_equal");
    const RingMatrix<Int> a = build_A(p);
    const Int expected = bareiss_det(build_C(p));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(p); ++i)
        for (std::size_t j = 1; j <= static_cast<std::size_t>(p); ++j)
            if (cofactor(a, i, j) != expected) return false;
    return true;
}

// (x^2 - 1)(x^2 - p)^((p-3)/2) for p = 1 (mod 4),
// (x^2 + 1)(x^2 + p)^((p-3)/2) for p = 3 (mod 4): the characteristic
// polynomial the stated spectrum of B_p implies.
inline IntPoly expected_char_poly(std::int64_t p) {
    detail::require_odd_prime(p, "expected_char_poly");
    const Int s = (p % 4 == 1) ? 1 : -1;
    IntPoly acc{-s, 0, 1};
    const IntPoly quad{-s * p, 0, 1};
    for (std::int64_t k = 0; k < (p - 3) / 2; ++k) acc *= quad;
    return acc;
}

// Verdicts for the exact spectral checks at a given odd prime.
struct SpectrumReport {
    std::int64_t p = 0;
    Int det_C;
    IntPoly char_poly_B;
    IntPoly expected;
    bool det_ok = false;        // det C_p == (-1)^((p-1)/2) p^((p-3)/2)
    bool char_poly_ok = false;  // char_poly(B_p) == expected
    // w1/w2 verdicts cover the exact integer eigen-relations appropriate to
    // the residue class of p: C_p w1 = w1 and C_p w2 = -w2 always, and since
    // B_p = C_p E with E fixing w1, w2 for p = 1 (mod 4) but swapping them
    // for p = 3 (mod 4), additionally B_p w1 = w1, B_p w2 = -w2 (p = 1) or
    // B_p w1 = -w2, B_p w2 = w1 (p = 3). A skew-symmetric B_p (p = 3) has
    // purely imaginary spectrum, so it cannot have w1 as a real eigenvector.
    bool w1_ok = false;
    bool w2_ok = false;
    std::optional<bool> cofactors_equal;  // empty when the O(p^2) sweep was skipped
    std::optional<Int> chapman_plus;      // p = 3 mod 4, p > 3 only
    std::optional<Int> chapman_minus;

    bool all_ok() const {
        const bool cof_ok = !cofactors_equal || *cofactors_equal;
        const bool chapman_ok = (!chapman_plus || *chapman_plus == -1) && (!chapman_minus || *chapman_minus == -1);
        return det_ok && char_poly_ok && w1_ok && w2_ok && cof_ok && chapman_ok;
    }
};

// 0-1 vectors marking nonresidues (w1) and residues (w2): the exact
// eigenvectors of B_p for the eigenvalues +1 and -1.
inline std::vector<Int> w1_vector(std::int64_t p) {
    std::vector<Int> w(static_cast<std::size_t>(p - 1));
    for (std::int64_t j = 1; j < p; ++j)
        w[static_cast<std::size_t>(j - 1)] = (1 - legendre(j, p).value()) / 2;
    return w;
}

inline std::vector<Int> w2_vector(std::int64_t p) {
    std::vector<Int> w(static_cast<std::size_t>(p - 1));
    for (std::int64_t j = 1; j < p; ++j)
        w[static_cast<std::size_t>(j - 1)] = (1 + legendre(j, p).value()) / 2;
    return w;
}

// Determinant of the (p-1)/2-dimensional 0-1 matrix
// [(1 +- (i+j-1 / p)) / 2]; evaluates to -1 for every prime p > 3 with
// p = 3 (mod 4), the only case asserted.
inline Int chapman_det(std::int64_t p, int sign) {
    detail::require_odd_prime(p, "chapman_det");
    if (sign != 1 && sign != -1) throw std::domain_error("chapman_det: sign must be +1 or -1");
    if (p <= 3 || p % 4 != 3) throw std::domain_error("chapman_det: requires p > 3 with p = 3 (mod 4)");
    const std::size_t d = static_cast<std::size_t>((p - 1) / 2);
    return bareiss_det(RingMatrix<Int>::build(d, d, [p, sign](std::size_t i, std::size_t j) {
        return Int((1 + sign * legendre(static_cast<std::int64_t>(i + j) - 1, p).value()) / 2);
    }));
}

// Full exact spectral verification for one prime. The spectrum claim is
// checked through the integer characteristic polynomial rather than any
// numeric eigensolver; w1/w2 are checked as exact integer eigenvectors.
// with_cofactors additionally runs the exhaustive cofactor comparison.
inline SpectrumReport spectrum_check(std::int64_t p, bool with_cofactors = true) {
    detail::require_odd_prime(p, "spectrum_check");
    SpectrumReport rep;
    rep.p = p;
    const RingMatrix<Int> c = build_C(p);
    rep.det_C = bareiss_det(c);
    Int expected_det = pow_int(p, static_cast<std::uint64_t>((p - 3) / 2));
    if ((p - 1) / 2 % 2 != 0) expected_det = -expected_det;
    rep.det_ok = rep.det_C == expected_det;

    const RingMatrix<Int> b = build_B(p);
    rep.char_poly_B = char_poly(b);
    rep.expected = expected_char_poly(p);
    rep.char_poly_ok = rep.char_poly_B == rep.expected;

    const std::vector<Int> w1 = w1_vector(p);
    const std::vector<Int> w2 = w2_vector(p);
    std::vector<Int> neg_w2 = w2;
    for (auto& x : neg_w2) x = -x;
    // Residue-class-correct eigen-relations (see the SpectrumReport field
    // comments for the derivation from B_p = C_p E).
    if (p % 4 == 1) {
        rep.w1_ok = (c * w1) == w1 && (b * w1) == w1;
        rep.w2_ok = (c * w2) == neg_w2 && (b * w2) == neg_w2;
    } else {
        rep.w1_ok = (c * w1) == w1 && (b * w1) == neg_w2;
        rep.w2_ok = (c * w2) == neg_w2 && (b * w2) == w1;
    }

    if (with_cofactors) rep.cofactors_equal = cofactors_all_equal(p);

    if (p > 3 && p % 4 == 3) {
        rep.chapman_plus = chapman_det(p, +1);
        rep.chapman_minus = chapman_det(p, -1);
    }
    return rep;
}

// The circulant eigenvalue relation D_p z_r = g_{-r} z_r, checked exactly
// in Z[zeta_p]^p with z_r = (zeta^(rj))_{j=0..p-1} and g_0 = 0. Row i gives
// sum_j ((i-j)/p) zeta^(rj) = zeta^(ri) sum_k (k/p) zeta^(-rk), so the
// eigenvalue paired with z_r is g_{-r} = legendre(-1,p) g_r; for
// p = 1 (mod 4) that equals g_r. Across r the eigenvalues are 0 once and
// each of +-g_1 with multiplicity (p-1)/2. The r = 0 case is the row-sum
// identity.
inline bool circulant_eigen_check(std::int64_t p, std::int64_t r) {
    detail::require_odd_prime(p, "circulant_eigen_check");
    if (r < 0 || r > p - 1) throw std::domain_error("circulant_eigen_check: r must be in 0..p-1");
    const CycloElem g = (r == 0) ? CycloElem(p) : gauss_sum(p, p - r);
    for (std::int64_t i = 0; i < p; ++i) {
        // row i of D_p against z_r
        std::vector<Int> acc(static_cast<std::size_t>(p), Int(0));
        for (std::int64_t j = 0; j < p; ++j) {
            const int sym = (i == j) ? 0 : legendre(i - j, p).value();
            if (sym == 0) continue;
            const std::size_t e = static_cast<std::size_t>((r * j) % p);
            acc[e] += sym;
        }
        const CycloElem lhs = CycloElem::reduced(p, std::move(acc));
        const CycloElem rhs = g * CycloElem::zeta_pow(p, r * i);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// Number of quadratic residues among 1..(p-1)/2. Equals (p-1)/4 exactly
// when p = 1 (mod 4) (residues are symmetric under m -> p-m); for
// p = 3 (mod 4) the count is merely reported, not asserted.
inline std::int64_t residues_in_half_range(std::int64_t p) {
    detail::require_odd_prime(p, "residues_in_half_range");
    std::int64_t count = 0;
    for (std::int64_t m = 1; m <= (p - 1) / 2; ++m)
        if (legendre(m, p).value() == 1) ++count;
    return count;
}

// ---- numeric spot checks (advisory; everything above is exact) ----

// Floating-point check that u_r = (sin(2 pi r j / p))_j satisfies
// B_p u_r = (r/p) sqrt(p) u_r within tol; p = 1 (mod 4) only.
inline bool real_eigenvector_spotcheck(std::int64_t p, std::int64_t r, double tol = 1e-9) {
    detail::require_odd_prime(p, "real_eigenvector_spotcheck");
    if (p % 4 != 1) throw std::domain_error("real_eigenvector_spotcheck: requires p = 1 (mod 4)");
    if (r < 1 || r > (p - 1) / 2) throw std::domain_error("real_eigenvector_spotcheck: r must be in 1..(p-1)/2");
    const double pi = std::acos(-1.0);
    std::vector<double> u(static_cast<std::size_t>(p - 1));
    for (std::int64_t j = 1; j < p; ++j)
        u[static_cast<std::size_t>(j - 1)] = std::sin(2 * pi * static_cast<double>(r) * static_cast<double>(j) / static_cast<double>(p));
    const double lambda = legendre(r, p).value() * std::sqrt(static_cast<double>(p));
    const RingMatrix<Int> b = build_B(p);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(p - 1); ++i) {
        double s = 0;
        for (std::size_t j = 1; j <= static_cast<std::size_t>(p - 1); ++j)
            s += b(i, j).convert_to<double>() * u[j - 1];
        if (std::abs(s - lambda * u[i - 1]) > tol) return false;
    }
    return true;
}

// Floating-point check of the cosine-difference eigenvector families:
// with g the smallest primitive root and h = g^4, the vectors
// v_1 - v_{h^k} (eigenvalue +sqrt(p)) and v_g - v_{g h^k} (eigenvalue
// -sqrt(p)) for k = 1..(p-1)/4 - 1, where v_r = (cos(2 pi r j / p))_j.
// Vacuously true when the family is empty (p = 5).
inline bool real_cosine_family_spotcheck(std::int64_t p, double tol = 1e-9) {
    detail::require_odd_prime(p, "real_cosine_family_spotcheck");
    if (p % 4 != 1) throw std::domain_error("real_cosine_family_spotcheck: requires p = 1 (mod 4)");
    const double pi = std::acos(-1.0);
    const std::int64_t g = primitive_root(p).convert_to<std::int64_t>();
    const std::int64_t h = mod_floor(pow_int(g, 4), p).convert_to<std::int64_t>();
    const double sqrt_p = std::sqrt(static_cast<double>(p));
    const RingMatrix<Int> b = build_B(p);

    auto v = [&](std::int64_t r) {
        std::vector<double> out(static_cast<std::size_t>(p - 1));
        for (std::int64_t j = 1; j < p; ++j)
            out[static_cast<std::size_t>(j - 1)] =
                std::cos(2 * pi * static_cast<double>(mod_floor(Int(r) * j, p).convert_to<std::int64_t>()) / static_cast<double>(p));
        return out;
    };
    auto check = [&](const std::vector<double>& vec, double lambda) {
        for (std::size_t i = 1; i <= static_cast<std::size_t>(p - 1); ++i) {
            double s = 0;
            for (std::size_t j = 1; j <= static_cast<std::size_t>(p - 1); ++j)
                s += b(i, j).convert_to<double>() * vec[j - 1];
            if (std::abs(s - lambda * vec[i - 1]) > tol) return false;
        }
        return true;
    };

    std::int64_t hk = 1, ghk = g;
    for (std::int64_t k = 1; k <= (p - 1) / 4 - 1; ++k) {
        hk = mod_floor(Int(hk) * h, p).convert_to<std::int64_t>();
        ghk = mod_floor(Int(ghk) * h, p).convert_to<std::int64_t>();
        std::vector<double> d1 = v(1), dh = v(hk);
        for (std::size_t i = 0; i < d1.size(); ++i) d1[i] -= dh[i];
        if (!check(d1, sqrt_p)) return false;
        std::vector<double> dg = v(g), dgh = v(ghk);
        for (std::size_t i = 0; i < dg.size(); ++i) dg[i] -= dgh[i];
        if (!check(dg, -sqrt_p)) return false;
    }
    return true;
}

}  // namespace hdet

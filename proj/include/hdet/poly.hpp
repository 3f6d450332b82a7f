#pragma once

#include <hdet/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdet {

// Thrown when a division that must be exact in Z[x] is not; carries the
// x-power at which exactness first failed.
class inexact_division : public std::runtime_error {
public:
    inexact_division(std::size_t coeff_index, const std::string& what)
        : std::runtime_error(what), index_(coeff_index) {}

    std::size_t coeff_index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Dense univariate polynomial over arbitrary-precision integers.
// Coefficients are stored little-endian (coeffs()[i] is the coefficient of
// x^i) and kept normalized: the highest stored coefficient is nonzero, and
// the zero polynomial stores nothing. degree() follows the NTL convention
// of returning -1 for the zero polynomial; it never collides with the
// degree of a nonzero constant.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(const Int& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }
    IntPoly(long long constant) : IntPoly(Int(constant)) {}
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

    static IntPoly variable() { return monomial(1); }

    // c * x^k
    static IntPoly monomial(std::size_t k, const Int& c = 1) {
        IntPoly f;
        if (c != 0) {
            f.coeffs_.assign(k + 1, Int(0));
            f.coeffs_[k] = c;
        }
        return f;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

    // Coefficient of x^k (zero beyond the degree).
    const Int& coeff(std::size_t k) const {
        static const Int zero = 0;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    const Int& leading() const {
        if (coeffs_.empty()) throw std::domain_error("IntPoly: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    IntPoly& operator+=(const IntPoly& g) {
        if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size());
        for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
        normalize();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& g) {
        if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size());
        for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
        normalize();
        return *this;
    }
    IntPoly& operator*=(const IntPoly& g) {
        *this = *this * g;
        return *this;
    }
    IntPoly& operator*=(const Int& c) {
        if (c == 0) {
            coeffs_.clear();
        } else {
            for (auto& a : coeffs_) a *= c;
        }
        return *this;
    }

    friend IntPoly operator+(IntPoly f, const IntPoly& g) {
        f += g;
        return f;
    }
    friend IntPoly operator-(IntPoly f, const IntPoly& g) {
        f -= g;
        return f;
    }
    friend IntPoly operator-(IntPoly f) {
        for (auto& a : f.coeffs_) a = -a;
        return f;
    }
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g) {
        IntPoly r;
        r.coeffs_ = mul_coeffs(f.coeffs_, g.coeffs_);
        r.normalize();
        return r;
    }
    friend IntPoly operator*(IntPoly f, const Int& c) {
        f *= c;
        return f;
    }
    friend IntPoly operator*(const Int& c, IntPoly f) {
        f *= c;
        return f;
    }

    // Horner evaluation at an integer point.
    Int operator()(const Int& x) const {
        Int r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }

    // Canonical text form, descending powers with zero terms omitted,
    // e.g. "x^4 - x^3 + x - 1"; the zero polynomial renders as "0".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Int& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            Int mag = abs(c);
            if (mag != 1 || k == 0) os << mag.str();
            if (k >= 1) os << "x";
            if (k >= 2) os << "^" << k;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << f.str(); }

private:
    static constexpr std::size_t karatsuba_threshold = 32;

    static std::vector<Int> mul_coeffs(std::span<const Int> a, std::span<const Int> b) {
        if (a.empty() || b.empty()) return {};
        if (a.size() < karatsuba_threshold || b.size() < karatsuba_threshold) return mul_school(a, b);
        return mul_karatsuba(a, b);
    }

    static std::vector<Int> mul_school(std::span<const Int> a, std::span<const Int> b) {
        std::vector<Int> r(a.size() + b.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j] != 0) r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }

    static std::vector<Int> mul_karatsuba(std::span<const Int> a, std::span<const Int> b) {
        const std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
        if (a.size() <= h || b.size() <= h) {
            // too unbalanced to split both; multiply the longer in halves
            std::span<const Int> lo_a = a.subspan(0, std::min(h, a.size()));
            std::span<const Int> lo_b = b.subspan(0, std::min(h, b.size()));
            std::vector<Int> r(a.size() + b.size() - 1, Int(0));
            std::vector<Int> low = mul_coeffs(lo_a, lo_b);
            for (std::size_t i = 0; i < low.size(); ++i) r[i] += low[i];
            if (a.size() > h) {
                std::vector<Int> hi = mul_coeffs(a.subspan(h), b);
                for (std::size_t i = 0; i < hi.size(); ++i) r[i + h] += hi[i];
            } else if (b.size() > h) {
                std::vector<Int> hi = mul_coeffs(a, b.subspan(h));
                for (std::size_t i = 0; i < hi.size(); ++i) r[i + h] += hi[i];
            }
            return r;
        }
        std::span<const Int> a0 = a.subspan(0, h), a1 = a.subspan(h);
        std::span<const Int> b0 = b.subspan(0, h), b1 = b.subspan(h);
        std::vector<Int> z0 = mul_coeffs(a0, b0);
        std::vector<Int> z2 = mul_coeffs(a1, b1);
        std::vector<Int> sa(std::max(a0.size(), a1.size()), Int(0));
        std::vector<Int> sb(std::max(b0.size(), b1.size()), Int(0));
        for (std::size_t i = 0; i < a0.size(); ++i) sa[i] += a0[i];
        for (std::size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
        for (std::size_t i = 0; i < b0.size(); ++i) sb[i] += b0[i];
        for (std::size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];
        std::vector<Int> z1 = mul_coeffs(sa, sb);
        for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
        for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
        std::vector<Int> r(a.size() + b.size() - 1, Int(0));
        for (std::size_t i = 0; i < z0.size(); ++i) r[i] += z0[i];
        for (std::size_t i = 0; i < z1.size(); ++i) r[i + h] += z1[i];
        for (std::size_t i = 0; i < z2.size(); ++i) r[i + 2 * h] += z2[i];
        return r;
    }

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

// Exact quotient f / g in Z[x]. Throws inexact_division if g does not
// divide f; the exception records the x-power whose coefficient first
// failed to divide out.
inline IntPoly divexact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("divexact: division by zero polynomial");
    if (f.is_zero()) return IntPoly();
    if (f.degree() < g.degree())
        throw inexact_division(static_cast<std::size_t>(f.degree()),
                               "divexact: divisor degree exceeds dividend degree");
    std::vector<Int> rem(f.coeffs());
    const std::vector<Int>& d = g.coeffs();
    const Int& lead = g.leading();
    const std::size_t qsize = rem.size() - d.size() + 1;
    std::vector<Int> q(qsize, Int(0));
    for (std::size_t k = qsize; k-- > 0;) {
        const Int& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw inexact_division(k + d.size() - 1, "divexact: inexact division at x^" +
                                                         std::to_string(k + d.size() - 1));
        q[k] = top / lead;
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q[k] * d[i];
    }
    for (std::size_t i = 0; i < d.size() - 1; ++i) {
        if (rem[i] != 0) throw inexact_division(i, "divexact: nonzero remainder at x^" + std::to_string(i));
    }
    return IntPoly(std::move(q));
}

// Unique polynomial of degree < points.size() through the given
// (node, value) pairs, computed with exact rational arithmetic. Nodes must
// be pairwise distinct and the result must have integer coefficients;
// a fractional coefficient means the caller's degree bound was wrong and
// raises inexact_division at the offending power.
inline IntPoly lagrange_interpolate(std::span<const std::pair<Int, Int>> points) {
    const std::size_t n = points.size();
    if (n == 0) return IntPoly();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::domain_error("lagrange_interpolate: duplicate node " + points[i].first.str());

    // Newton divided differences, then expansion to the monomial basis.
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(points[i].second);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i].first - points[i - level].first);

    std::vector<Rat> acc(n, Rat(0));  // coefficients, little-endian
    for (std::size_t i = n; i-- > 0;) {
        // acc = acc * (x - x_i) + dd[i]
        for (std::size_t k = n - 1; k >= 1; --k)
            acc[k] = (k >= 1 ? acc[k - 1] : Rat(0)) - acc[k] * Rat(points[i].first);
        acc[0] = dd[i] - acc[0] * Rat(points[i].first);
    }

    std::vector<Int> coeffs(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (boost::multiprecision::denominator(acc[k]) != 1)
            throw inexact_division(k, "lagrange_interpolate: non-integral coefficient at x^" +
                                          std::to_string(k));
        coeffs[k] = boost::multiprecision::numerator(acc[k]);
    }
    return IntPoly(std::move(coeffs));
}

inline IntPoly lagrange_interpolate(const std::vector<std::pair<Int, Int>>& points) {
    return lagrange_interpolate(std::span<const std::pair<Int, Int>>(points));
}

}  // namespace hdet

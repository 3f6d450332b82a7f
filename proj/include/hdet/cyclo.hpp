#pragma once

#include <hdet/arith.hpp>
#include <hdet/integer.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hdet {

// Element of Z[zeta_p] for an odd prime p, stored as integer coordinates
// on the canonical basis {zeta^0, ..., zeta^(p-2)}. Products reduce first
// through zeta^p = 1 and then through 1 + zeta + ... + zeta^(p-1) = 0, so
// equal elements always have equal coordinates. Elements with different
// moduli never mix.
class CycloElem {
public:
    explicit CycloElem(std::int64_t p) : p_(checked_modulus(p)), coeffs_(static_cast<std::size_t>(p - 1), Int(0)) {}

    static CycloElem from_int(std::int64_t p, const Int& k) {
        CycloElem e(p);
        e.coeffs_[0] = k;
        return e;
    }

    // zeta^e, any integer exponent.
    static CycloElem zeta_pow(std::int64_t p, std::int64_t e) {
        CycloElem r(p);
        e %= p;
        if (e < 0) e += p;
        if (e == static_cast<std::int64_t>(p - 1)) {
            for (auto& c : r.coeffs_) c = -1;
        } else {
            r.coeffs_[static_cast<std::size_t>(e)] = 1;
        }
        return r;
    }

    std::int64_t modulus() const noexcept { return p_; }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // The rational integer value, if the element lies in Z.
    std::optional<Int> as_integer() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return std::nullopt;
        return coeffs_[0];
    }

    friend bool operator==(const CycloElem& a, const CycloElem& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

    CycloElem& operator+=(const CycloElem& o) {
        check_same_modulus(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CycloElem& operator-=(const CycloElem& o) {
        check_same_modulus(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    CycloElem& operator*=(const CycloElem& o) {
        *this = *this * o;
        return *this;
    }
    CycloElem& operator*=(const Int& c) {
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator-(CycloElem a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend CycloElem operator*(const Int& c, CycloElem a) { return a *= c; }
    friend CycloElem operator*(CycloElem a, const Int& c) { return a *= c; }

    friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
        a.check_same_modulus(b);
        const std::size_t p = static_cast<std::size_t>(a.p_);
        std::vector<Int> acc(p, Int(0));  // exponents 0..p-1
        for (std::size_t i = 0; i < p - 1; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < p - 1; ++j) {
                if (b.coeffs_[j] == 0) continue;
                std::size_t e = i + j;
                if (e >= p) e -= p;
                acc[e] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return reduced(a.p_, std::move(acc));
    }

    // The automorphism zeta -> zeta^(-1); an element is real (fixed by
    // complex conjugation in any embedding) iff fixed by this map.
    CycloElem conjugate() const {
        const std::size_t p = static_cast<std::size_t>(p_);
        std::vector<Int> acc(p, Int(0));
        acc[0] = coeffs_[0];
        for (std::size_t i = 1; i < p - 1; ++i) acc[p - i] = coeffs_[i];
        return reduced(p_, std::move(acc));
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Int& c = coeffs_[i];
            if (c == 0) continue;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            Int mag = abs(c);
            if (mag != 1 || i == 0) os << mag.str();
            if (i >= 1) os << "z";
            if (i >= 2) os << "^" << i;
        }
        if (first) return "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const CycloElem& e) { return os << e.str(); }

    // Collapses a coefficient vector over exponents 0..p-1 to the canonical
    // basis via zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
    static CycloElem reduced(std::int64_t p, std::vector<Int> acc) {
        if (acc.size() != static_cast<std::size_t>(p))
            throw std::invalid_argument("CycloElem::reduced: expected p coefficients");
        CycloElem r(p);
        const Int top = acc.back();
        for (std::size_t i = 0; i + 1 < acc.size(); ++i) r.coeffs_[i] = acc[i] - top;
        return r;
    }

private:
    static std::int64_t checked_modulus(std::int64_t p) {
        thread_local std::int64_t last_ok = 0;  // avoids re-running primality in hot loops
        if (p == last_ok) return p;
        if (p < 3 || !is_prime(p)) throw std::domain_error("CycloElem: modulus must be an odd prime");
        last_ok = p;
        return p;
    }

    void check_same_modulus(const CycloElem& o) const {
        if (p_ != o.p_) throw std::invalid_argument("CycloElem: mixed moduli " + std::to_string(p_) +
                                                    " and " + std::to_string(o.p_));
    }

    std::int64_t p_;
    std::vector<Int> coeffs_;
};

// Quadratic Gauss sum g_r = sum_{j=0}^{p-1} (j/p) zeta^(rj) as an exact
// cyclotomic integer; p an odd prime, r not divisible by p.
inline CycloElem gauss_sum(std::int64_t p, std::int64_t r) {
    if (!is_prime(p) || p == 2) throw std::domain_error("gauss_sum: p must be an odd prime");
    if (r % p == 0) throw std::domain_error("gauss_sum: r must not be divisible by p");
    std::vector<Int> acc(static_cast<std::size_t>(p), Int(0));
    for (std::int64_t j = 1; j < p; ++j) {
        std::int64_t e = mod_floor(Int(r) * j, p).convert_to<std::int64_t>();
        acc[static_cast<std::size_t>(e)] += legendre(j, p).value();
    }
    return CycloElem::reduced(p, std::move(acc));
}

// Sum of zeta^(rj) over j in 1..p-1 with (j/p) equal to sign (+1 or -1).
inline CycloElem qr_partial_sum(std::int64_t p, std::int64_t r, int sign) {
    if (!is_prime(p) || p == 2) throw std::domain_error("qr_partial_sum: p must be an odd prime");
    if (r % p == 0) throw std::domain_error("qr_partial_sum: r must not be divisible by p");
    if (sign != 1 && sign != -1) throw std::domain_error("qr_partial_sum: sign must be +1 or -1");
    std::vector<Int> acc(static_cast<std::size_t>(p), Int(0));
    for (std::int64_t j = 1; j < p; ++j) {
        if (legendre(j, p).value() != sign) continue;
        std::int64_t e = mod_floor(Int(r) * j, p).convert_to<std::int64_t>();
        acc[static_cast<std::size_t>(e)] += 1;
    }
    return CycloElem::reduced(p, std::move(acc));
}

}  // namespace hdet

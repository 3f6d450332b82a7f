#pragma once

#include <hdet/integer.hpp>
#include <hdet/poly.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hdet {

// Customization point for the coefficient domains RingMatrix works over.
// A domain must be an integral domain with decidable exact division; the
// fraction-free elimination below performs only divisions it can prove
// exact, so divexact never fails on its calls.
template <typename D>
struct ring_traits;

template <>
struct ring_traits<Int> {
    static Int zero() { return 0; }
    static Int one() { return 1; }
    static bool is_zero(const Int& a) { return a == 0; }
    static Int divexact(const Int& a, const Int& b) {
        if (b == 0) throw std::domain_error("ring_traits<Int>::divexact: division by zero");
        if (a % b != 0) throw std::domain_error("ring_traits<Int>::divexact: inexact division");
        return a / b;
    }
};

template <>
struct ring_traits<IntPoly> {
    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(1); }
    static bool is_zero(const IntPoly& a) { return a.is_zero(); }
    static IntPoly divexact(const IntPoly& a, const IntPoly& b) { return hdet::divexact(a, b); }
};

// Dense matrix over an exact integral domain D (integers or IntPoly).
// All public row/column indices are 1-based.
template <typename D>
class RingMatrix {
public:
    RingMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, ring_traits<D>::zero()) {}

    // Entries from a generator g(i, j) called with 1-based indices.
    template <typename Gen>
    static RingMatrix build(std::size_t rows, std::size_t cols, Gen&& g) {
        RingMatrix m(rows, cols);
        for (std::size_t i = 1; i <= rows; ++i)
            for (std::size_t j = 1; j <= cols; ++j) m(i, j) = g(i, j);
        return m;
    }

    static RingMatrix identity(std::size_t n) {
        RingMatrix m(n, n);
        for (std::size_t i = 1; i <= n; ++i) m(i, i) = ring_traits<D>::one();
        return m;
    }

    // Exchange matrix: ones along the anti-diagonal.
    static RingMatrix exchange(std::size_t n) {
        RingMatrix m(n, n);
        for (std::size_t i = 1; i <= n; ++i) m(i, n + 1 - i) = ring_traits<D>::one();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    D& operator()(std::size_t i, std::size_t j) {
        check_index(i, j);
        return entries_[(i - 1) * cols_ + (j - 1)];
    }
    const D& operator()(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return entries_[(i - 1) * cols_ + (j - 1)];
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    RingMatrix transpose() const {
        RingMatrix t(cols_, rows_);
        for (std::size_t i = 1; i <= rows_; ++i)
            for (std::size_t j = 1; j <= cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Submatrix with row i and column j removed (1-based).
    RingMatrix minor_matrix(std::size_t i, std::size_t j) const {
        check_index(i, j);
        if (rows_ < 2 || cols_ < 2) throw std::domain_error("minor_matrix: matrix too small");
        RingMatrix m(rows_ - 1, cols_ - 1);
        for (std::size_t r = 1, mr = 1; r <= rows_; ++r) {
            if (r == i) continue;
            for (std::size_t c = 1, mc = 1; c <= cols_; ++c) {
                if (c == j) continue;
                m(mr, mc) = (*this)(r, c);
                ++mc;
            }
            ++mr;
        }
        return m;
    }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RingMatrix: dimension mismatch in product");
        RingMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 1; i <= a.rows_; ++i)
            for (std::size_t k = 1; k <= a.cols_; ++k) {
                const D& aik = a(i, k);
                if (ring_traits<D>::is_zero(aik)) continue;
                for (std::size_t j = 1; j <= b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend std::vector<D> operator*(const RingMatrix& a, const std::vector<D>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("RingMatrix: dimension mismatch in mat_vec");
        std::vector<D> r(a.rows_, ring_traits<D>::zero());
        for (std::size_t i = 1; i <= a.rows_; ++i)
            for (std::size_t j = 1; j <= a.cols_; ++j) r[i - 1] += a(i, j) * v[j - 1];
        return r;
    }

    RingMatrix& operator*=(const D& c) {
        for (auto& e : entries_) e = e * c;
        return *this;
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw std::out_of_range("RingMatrix: index out of range (indices are 1-based)");
    }

    std::size_t rows_, cols_;
    std::vector<D> entries_;
};

// Determinant by fraction-free (Bareiss) elimination. Every division is
// exact in D. Pivoting scans the current row for its first nonzero entry
// and swaps columns, tracking the sign; an all-zero row means the matrix
// is singular and the zero element is returned.
template <typename D>
D bareiss_det(RingMatrix<D> m) {
    if (!m.is_square()) throw std::invalid_argument("bareiss_det: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return ring_traits<D>::one();
    int sign = 1;
    D prev = ring_traits<D>::one();
    for (std::size_t k = 1; k < n; ++k) {
        if (ring_traits<D>::is_zero(m(k, k))) {
            std::size_t piv = 0;
            for (std::size_t j = k + 1; j <= n; ++j) {
                if (!ring_traits<D>::is_zero(m(k, j))) {
                    piv = j;
                    break;
                }
            }
            if (piv == 0) return ring_traits<D>::zero();
            for (std::size_t i = k; i <= n; ++i) std::swap(m(i, k), m(i, piv));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i <= n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                D num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = ring_traits<D>::divexact(num, prev);
            }
            m(i, k) = ring_traits<D>::zero();
        }
        prev = m(k, k);
    }
    D det = m(n, n);
    if (sign < 0) det = ring_traits<D>::zero() - det;
    return det;
}

// Cofactor (-1)^(i+j) * minor(i, j) of a square matrix, 1-based indices.
template <typename D>
D cofactor(const RingMatrix<D>& m, std::size_t i, std::size_t j) {
    if (!m.is_square()) throw std::invalid_argument("cofactor: matrix must be square");
    if (m.rows() < 2) throw std::domain_error("cofactor: matrix must be at least 2x2");
    D det = bareiss_det(m.minor_matrix(i, j));
    if ((i + j) % 2 != 0) det = ring_traits<D>::zero() - det;
    return det;
}

// Characteristic polynomial det(xI - M) of an integer matrix, monic of
// degree dim. Computed by evaluating det(tI - M) at dim+1 integer nodes
// with bareiss_det and interpolating, so the arithmetic stays in Z.
inline IntPoly char_poly(const RingMatrix<Int>& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return IntPoly(1);
    std::vector<std::pair<Int, Int>> points;
    points.reserve(n + 1);
    // nodes 0, 1, -1, 2, -2, ...
    for (long long t = 0; points.size() < n + 1; t = (t > 0 ? -t : -t + 1)) {
        RingMatrix<Int> shifted(n, n);
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) shifted(i, j) = (i == j ? Int(t) : Int(0)) - m(i, j);
        }
        points.emplace_back(Int(t), bareiss_det(std::move(shifted)));
    }
    return lagrange_interpolate(points);
}

}  // namespace hdet

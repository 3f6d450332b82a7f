#include <catch2/catch_amalgamated.hpp>

#include <hdet/arith.hpp>
#include <hdet/hankel.hpp>

#include <cstdint>
#include <vector>

using hdet::Int;
using hdet::IntPoly;

namespace {

// Independently verified coefficient lists (little-endian) for the small
// determinants; frozen before the implementation existed.
const IntPoly H3{0, 0, -1};
const IntPoly H5{0, 0, -5, 0, 5};
const IntPoly H7{0, 0, -49, -98, -49, -98, -49};
const IntPoly H11{0, 0, -14641, 0, -14641, -29282, -43923, -29282, -14641, 0, -14641};
const IntPoly H13{0, 0, -371293, 0, -371293, -742586, -371293, 0, 371293, 742586, 371293, 0, 371293};

}  // namespace

TEST_CASE("a_poly lists Jacobi symbols as coefficients", "[hankel]") {
    // n = 3: J(0)=0, J(1)=1, J(2)=-1, J(3)=0, J(4)=1
    REQUIRE(hdet::a_poly(1, 3) == IntPoly(1));
    REQUIRE(hdet::a_poly(2, 3) == IntPoly({-1, 1}));
    REQUIRE(hdet::a_poly(3, 3) == IntPoly({0, -1, 1}));
    REQUIRE(hdet::a_poly(4, 3) == IntPoly({1, 0, -1, 1}));

    // n = 1: every Jacobi symbol J(a, 1) is 1
    REQUIRE(hdet::a_poly(3, 1) == IntPoly({1, 1, 1, 1}));

    // generic coefficient check against jacobi directly
    for (std::int64_t n : {9, 15, 21})
        for (std::int64_t k = 1; k <= 12; ++k) {
            const IntPoly a = hdet::a_poly(k, n);
            for (std::int64_t m = 0; m <= k; ++m)
                REQUIRE(a.coeff(static_cast<std::size_t>(m)) == hdet::jacobi(k - m, n).value());
        }
}

TEST_CASE("a_poly is monic of degree k-1 for odd n >= 3", "[hankel]") {
    for (std::int64_t n : {3, 9, 15, 21})
        for (std::int64_t k = 1; k <= 10; ++k) {
            const IntPoly a = hdet::a_poly(k, n);
            REQUIRE(a.degree() == k - 1);
            REQUIRE(a.is_monic());
        }
}

TEST_CASE("successive a's telescope to a constant", "[hankel]") {
    for (std::int64_t n : {3, 9, 15})
        for (std::int64_t k = 1; k <= 20; ++k) {
            const IntPoly diff = hdet::a_poly(k + 1, n) - IntPoly::variable() * hdet::a_poly(k, n);
            REQUIRE(diff == IntPoly(Int(hdet::jacobi(k + 1, n).value())));
        }
}

TEST_CASE("a_poly rejects bad arguments", "[hankel]") {
    REQUIRE_THROWS_AS(hdet::a_poly(0, 3), std::domain_error);
    REQUIRE_THROWS_AS(hdet::a_poly(1, 4), std::domain_error);
    REQUIRE_THROWS_AS(hdet::a_poly(1, -3), std::domain_error);
}

TEST_CASE("build_hankel is constant along anti-diagonals", "[hankel]") {
    const auto inst = hdet::build_hankel(7);
    REQUIRE(inst.n == 7);
    REQUIRE(inst.matrix.rows() == 7);
    REQUIRE(inst.matrix.cols() == 7);
    for (std::size_t i = 1; i <= 7; ++i)
        for (std::size_t j = 1; j <= 7; ++j)
            REQUIRE(inst.matrix(i, j) == hdet::a_poly(static_cast<std::int64_t>(i + j) - 1, 7));

    REQUIRE_THROWS_AS(hdet::build_hankel(1), std::domain_error);
    REQUIRE_THROWS_AS(hdet::build_hankel(6), std::domain_error);
}

TEST_CASE("direct determinants reproduce the frozen table", "[hankel]") {
    REQUIRE(hdet::det_direct(hdet::build_hankel(3)) == H3);
    REQUIRE(hdet::det_direct(hdet::build_hankel(5)) == H5);
    REQUIRE(hdet::det_direct(hdet::build_hankel(7)) == H7);
    REQUIRE(hdet::det_direct(hdet::build_hankel(9)).is_zero());
    REQUIRE(hdet::det_direct(hdet::build_hankel(11)) == H11);
}

TEST_CASE("interpolated determinants reproduce the frozen table", "[hankel]") {
    REQUIRE(hdet::det_interp(3) == H3);
    REQUIRE(hdet::det_interp(5) == H5);
    REQUIRE(hdet::det_interp(7) == H7);
    REQUIRE(hdet::det_interp(9).is_zero());
    REQUIRE(hdet::det_interp(11) == H11);
    REQUIRE(hdet::det_interp(13) == H13);
    REQUIRE(hdet::det_interp(15).is_zero());
    REQUIRE_THROWS_AS(hdet::det_interp(9 * 2), std::domain_error);
}

TEST_CASE("det_interp is independent of the thread count", "[hankel]") {
    REQUIRE(hdet::det_interp(11, 4) == hdet::det_interp(11, 1));
    REQUIRE(hdet::det_interp(9, 3).is_zero());
}

TEST_CASE("three-way agreement on small inputs", "[hankel]") {
    for (std::int64_t n : {3, 5, 7, 11, 13}) {
        const IntPoly direct = hdet::det_direct(hdet::build_hankel(n));
        REQUIRE(direct == hdet::det_interp(n, 2));
        REQUIRE(direct == hdet::closed_form(n));
    }
    for (std::int64_t n : {9, 15}) {
        REQUIRE(hdet::det_direct(hdet::build_hankel(n)).is_zero());
        REQUIRE(hdet::det_interp(n, 2).is_zero());
    }
}

TEST_CASE("direct and interpolated determinants agree up to n = 21", "[hankel][slow]") {
    for (std::int64_t n = 17; n <= 21; n += 2)
        REQUIRE(hdet::det_direct(hdet::build_hankel(n)) == hdet::det_interp(n, 4));
}

TEST_CASE("partial sums of legendre symbols", "[hankel]") {
    const auto b7 = hdet::partial_sums(7);
    REQUIRE(b7.p == 7);
    REQUIRE(b7.b == std::vector<std::int64_t>{0, 0, 1, 2, 1, 2, 1});
    const auto b11 = hdet::partial_sums(11);
    REQUIRE(b11.b == std::vector<std::int64_t>{0, 0, 1, 0, 1, 2, 3, 2, 1, 0, 1});

    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        const auto v = hdet::partial_sums(p);
        REQUIRE(v.b.size() == static_cast<std::size_t>(p));
        REQUIRE(v.b[0] == 0);  // full character sum vanishes
        REQUIRE(v.b[1] == 0);
        REQUIRE(v.b[static_cast<std::size_t>(p - 1)] == 1);
        // b_k - b_{k+1} = legendre(p - k, p)
        for (std::int64_t k = 0; k < p - 1; ++k)
            REQUIRE(v.b[static_cast<std::size_t>(k)] - v.b[static_cast<std::size_t>(k + 1)] ==
                    hdet::legendre(p - k, p).value());
    }
    REQUIRE_THROWS_AS(hdet::partial_sums(9), std::domain_error);
}

TEST_CASE("closed form matches the determinants and the sign pattern", "[hankel]") {
    REQUIRE(hdet::closed_form(3) == H3);
    REQUIRE(hdet::closed_form(5) == H5);
    REQUIRE(hdet::closed_form(7) == H7);
    REQUIRE(hdet::closed_form(11) == H11);
    REQUIRE(hdet::closed_form(13) == H13);

    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101}) {
        const IntPoly h = hdet::closed_form(p);
        REQUIRE(h.degree() == p - 1);
        REQUIRE(h.coeff(0) == 0);
        REQUIRE(h.coeff(1) == 0);
        Int lead = hdet::pow_int(p, static_cast<std::uint64_t>((p - 3) / 2));
        if ((p - 1) / 2 % 2 != 0) lead = -lead;
        REQUIRE(h.leading() == lead);
    }
}

TEST_CASE("the two vanishing coefficient sums for p = 1 mod 4", "[hankel]") {
    for (std::int64_t p : {5, 13, 17, 29, 37, 41}) {
        const IntPoly h = hdet::closed_form(p);
        REQUIRE(h(Int(1)) == 0);
        REQUIRE(h(Int(-1)) == 0);
    }
}

TEST_CASE("closed form refuses composite input loudly", "[hankel]") {
    REQUIRE_THROWS_AS(hdet::closed_form(9), std::domain_error);
    REQUIRE_THROWS_WITH(hdet::closed_form(15), Catch::Matchers::ContainsSubstring("certificate"));
}

TEST_CASE("divisibility reports", "[hankel]") {
    const auto r3 = hdet::divisibility_report(3);
    REQUIRE(r3.quotient_x2 == IntPoly(-1));
    REQUIRE_FALSE(r3.quotient_x2_x2m1.has_value());
    REQUIRE(r3.b_shift_ok.has_value());
    REQUIRE(*r3.b_shift_ok);

    const auto r7 = hdet::divisibility_report(7);
    REQUIRE(r7.reduced_coeffs == std::vector<Int>{1, 2, 1, 2, 1});  // b_2..b_6
    REQUIRE(r7.b_shift_ok.has_value());
    REQUIRE(*r7.b_shift_ok);

    const auto r13 = hdet::divisibility_report(13);
    REQUIRE(r13.quotient_x2_x2m1.has_value());
    REQUIRE_FALSE(r13.b_shift_ok.has_value());
    // reassemble H_13 from the quotient
    const IntPoly x2x2m1{0, 0, -1, 0, 1};
    REQUIRE(*r13.quotient_x2_x2m1 * x2x2m1 == hdet::closed_form(13));

    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        const auto rep = hdet::divisibility_report(p);
        REQUIRE(rep.quotient_x2 * IntPoly::monomial(2) == rep.h);
        if (p % 4 == 1) REQUIRE(rep.quotient_x2_x2m1.has_value());
        if (p % 4 == 3) REQUIRE(*rep.b_shift_ok);
    }
    REQUIRE_THROWS_AS(hdet::divisibility_report(15), std::domain_error);
}

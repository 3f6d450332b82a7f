#include <catch2/catch_amalgamated.hpp>

#include <hdet/arith.hpp>
#include <hdet/cyclo.hpp>
#include <hdet/hankel.hpp>
#include <hdet/linalg.hpp>
#include <hdet/spectral.hpp>

#include <cstdint>
#include <vector>

using hdet::Int;
using hdet::IntPoly;
using hdet::RingMatrix;

TEST_CASE("the four symbol matrices have the displayed entries", "[spectral]") {
    const auto a = hdet::build_A(7);
    REQUIRE(a.rows() == 7);
    for (std::size_t i = 1; i <= 7; ++i)
        for (std::size_t j = 1; j <= 7; ++j)
            REQUIRE(a(i, j) == hdet::legendre(static_cast<std::int64_t>(i + j) - 1, 7).value());

    const auto c = hdet::build_C(7);
    REQUIRE(c.rows() == 6);
    REQUIRE(c(1, 1) == hdet::legendre(2, 7).value());

    const auto b = hdet::build_B(7);
    REQUIRE(b.rows() == 6);
    for (std::size_t i = 1; i <= 6; ++i) REQUIRE(b(i, i) == 0);

    const auto d = hdet::build_D(7);
    REQUIRE(d.rows() == 7);
    REQUIRE(d(1, 7) == hdet::legendre(-6, 7).value());

    REQUIRE_THROWS_AS(hdet::build_A(9), std::domain_error);
    REQUIRE_THROWS_AS(hdet::build_B(2), std::domain_error);
}

TEST_CASE("the rows of A_p sum to zero", "[spectral]") {
    for (std::int64_t p : {3, 7, 11}) {
        const auto a = hdet::build_A(p);
        for (std::size_t i = 1; i <= static_cast<std::size_t>(p); ++i) {
            Int sum = 0;
            for (std::size_t j = 1; j <= static_cast<std::size_t>(p); ++j) sum += a(i, j);
            REQUIRE(sum == 0);
        }
    }
}

TEST_CASE("B_p is C_p times the exchange matrix", "[spectral]") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        REQUIRE(hdet::build_B(p) ==
                hdet::build_C(p) * RingMatrix<Int>::exchange(static_cast<std::size_t>(p - 1)));
}

TEST_CASE("B_p is symmetric or skew by the residue class of p", "[spectral]") {
    for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        auto bt = hdet::build_B(p).transpose();
        if (p % 4 == 3) bt *= Int(-1);
        REQUIRE(bt == hdet::build_B(p));
    }
}

TEST_CASE("all cofactors of A_p share the known common value", "[spectral]") {
    const auto a3 = hdet::build_A(3);
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j) REQUIRE(hdet::cofactor(a3, i, j) == -1);
    REQUIRE(hdet::cofactors_all_equal(3));

    const auto a5 = hdet::build_A(5);
    for (std::size_t i = 1; i <= 5; ++i)
        for (std::size_t j = 1; j <= 5; ++j) REQUIRE(hdet::cofactor(a5, i, j) == 5);
    REQUIRE(hdet::cofactors_all_equal(5));

    const auto a7 = hdet::build_A(7);
    REQUIRE(hdet::cofactor(a7, 1, 1) == -49);
    REQUIRE(hdet::cofactor(a7, 4, 6) == -49);
    REQUIRE(hdet::cofactors_all_equal(7));
}

TEST_CASE("the common cofactor reassembles the Hankel determinant", "[spectral]") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const Int common = hdet::cofactor(hdet::build_A(p), 1, 1);
        IntPoly sum;
        for (std::int64_t j = 1; j <= p; ++j) sum += hdet::a_poly(j, p);
        REQUIRE(common * sum == hdet::closed_form(p));
    }
}

TEST_CASE("det C_p has the closed-form value", "[spectral]") {
    const std::vector<std::pair<std::int64_t, Int>> expected = {
        {3, -1}, {5, 5}, {7, -49}, {11, Int(-14641)}, {13, Int(371293)}};
    for (const auto& [p, value] : expected) REQUIRE(hdet::bareiss_det(hdet::build_C(p)) == value);
}

TEST_CASE("expected_char_poly by residue class", "[spectral]") {
    REQUIRE(hdet::expected_char_poly(5) == IntPoly({5, 0, -6, 0, 1}));
    // (x^2+1)(x^2+7)^2 = x^6 + 15x^4 + 63x^2 + 49
    REQUIRE(hdet::expected_char_poly(7) == IntPoly({49, 0, 63, 0, 15, 0, 1}));
    REQUIRE(hdet::expected_char_poly(3) == IntPoly({1, 0, 1}));
}

TEST_CASE("w1 and w2 mark nonresidues and residues", "[spectral]") {
    REQUIRE(hdet::w1_vector(7) == std::vector<Int>{0, 0, 1, 0, 1, 1});
    REQUIRE(hdet::w2_vector(7) == std::vector<Int>{1, 1, 0, 1, 0, 0});
    for (std::int64_t p : {5, 11, 13}) {
        const auto w1 = hdet::w1_vector(p), w2 = hdet::w2_vector(p);
        for (std::size_t j = 0; j < w1.size(); ++j) REQUIRE(w1[j] + w2[j] == 1);
    }
}

TEST_CASE("spectrum reports pass for small primes", "[spectral]") {
    const auto r5 = hdet::spectrum_check(5);
    REQUIRE(r5.det_C == 5);
    REQUIRE(r5.char_poly_B == IntPoly({5, 0, -6, 0, 1}));
    REQUIRE(r5.det_ok);
    REQUIRE(r5.char_poly_ok);
    REQUIRE(r5.w1_ok);
    REQUIRE(r5.w2_ok);
    REQUIRE(r5.cofactors_equal.has_value());
    REQUIRE(*r5.cofactors_equal);
    REQUIRE_FALSE(r5.chapman_plus.has_value());
    REQUIRE(r5.all_ok());

    const auto r7 = hdet::spectrum_check(7);
    REQUIRE(r7.det_C == -49);
    REQUIRE(r7.char_poly_B == IntPoly({49, 0, 63, 0, 15, 0, 1}));
    REQUIRE(r7.chapman_plus.has_value());
    REQUIRE(*r7.chapman_plus == -1);
    REQUIRE(*r7.chapman_minus == -1);
    REQUIRE(r7.all_ok());

    const auto r13 = hdet::spectrum_check(13);
    REQUIRE(r13.char_poly_B ==
            IntPoly({371293, 0, -514098, 0, 164775, 0, -23660, 0, 1755, 0, -66, 0, 1}));
    REQUIRE(r13.all_ok());
    // (p-1)/2 even: det B = det C
    REQUIRE(hdet::bareiss_det(hdet::build_B(13)) == r13.det_C);

    // skipping the cofactor sweep leaves that field unset but nothing else
    const auto quick = hdet::spectrum_check(11, false);
    REQUIRE_FALSE(quick.cofactors_equal.has_value());
    REQUIRE(quick.all_ok());
}

TEST_CASE("w1/w2 eigen-relations split by residue class", "[spectral]") {
    // p = 3 (mod 4): C fixes w1 (eigenvalue 1) but the skew-symmetric B
    // maps w1 -> -w2 and w2 -> w1.
    const auto b = hdet::build_B(7);
    const auto c = hdet::build_C(7);
    const auto w1 = hdet::w1_vector(7);
    const auto w2 = hdet::w2_vector(7);
    std::vector<Int> neg_w2 = w2;
    for (auto& x : neg_w2) x = -x;
    REQUIRE(c * w1 == w1);
    REQUIRE(c * w2 == neg_w2);
    REQUIRE(b * w1 == neg_w2);
    REQUIRE(b * w2 == w1);
    // p = 1 (mod 4): E fixes w1 and w2, so B itself has them as eigenvectors.
    const auto b13 = hdet::build_B(13);
    const auto w1_13 = hdet::w1_vector(13);
    REQUIRE(b13 * w1_13 == w1_13);
}

TEST_CASE("circulant eigen relations hold exactly", "[spectral]") {
    for (std::int64_t p : {5, 7, 11})
        for (std::int64_t r = 0; r < p; ++r) REQUIRE(hdet::circulant_eigen_check(p, r));
    REQUIRE_THROWS_AS(hdet::circulant_eigen_check(5, 5), std::domain_error);
    REQUIRE_THROWS_AS(hdet::circulant_eigen_check(9, 1), std::domain_error);
}

TEST_CASE("chapman determinants are -1 in the asserted range", "[spectral]") {
    for (std::int64_t p : {7, 11, 19, 23}) {
        REQUIRE(hdet::chapman_det(p, +1) == -1);
        REQUIRE(hdet::chapman_det(p, -1) == -1);
    }
    REQUIRE_THROWS_AS(hdet::chapman_det(5, +1), std::domain_error);   // p = 1 mod 4
    REQUIRE_THROWS_AS(hdet::chapman_det(3, +1), std::domain_error);   // p = 3 excluded
    REQUIRE_THROWS_AS(hdet::chapman_det(7, 2), std::domain_error);    // bad sign
    REQUIRE_THROWS_AS(hdet::chapman_det(15, +1), std::domain_error);  // composite
}

TEST_CASE("residue counts in the half range", "[spectral]") {
    for (std::int64_t p : {5, 13, 17, 29}) REQUIRE(hdet::residues_in_half_range(p) == (p - 1) / 4);
    REQUIRE(hdet::residues_in_half_range(7) == 2);   // {1, 2} among 1..3
    REQUIRE(hdet::residues_in_half_range(11) == 4);  // {1, 3, 4, 5} among 1..5
}

TEST_CASE("numeric spot checks stay within tolerance", "[spectral]") {
    for (std::int64_t r = 1; r <= 2; ++r) REQUIRE(hdet::real_eigenvector_spotcheck(5, r));
    for (std::int64_t r = 1; r <= 6; ++r) REQUIRE(hdet::real_eigenvector_spotcheck(13, r));
    REQUIRE(hdet::real_cosine_family_spotcheck(5));
    REQUIRE(hdet::real_cosine_family_spotcheck(13));
    REQUIRE(hdet::real_cosine_family_spotcheck(17));
    REQUIRE_THROWS_AS(hdet::real_eigenvector_spotcheck(7, 1), std::domain_error);
    REQUIRE_THROWS_AS(hdet::real_eigenvector_spotcheck(13, 7), std::domain_error);
}

#include <catch2/catch_amalgamated.hpp>

#include <hdet/certificates.hpp>
#include <hdet/hankel.hpp>
#include <hdet/json_io.hpp>
#include <hdet/spectral.hpp>

#include <json.hpp>

#include <random>
#include <vector>

using hdet::Int;
using hdet::IntPoly;
using nlohmann::json;

TEST_CASE("polynomials serialize as little-endian decimal strings", "[json]") {
    json j;
    to_json(j, hdet::closed_form(5));
    REQUIRE(j == json::array({"0", "0", "-5", "0", "5"}));

    json zero;
    to_json(zero, IntPoly());
    REQUIRE(zero == json::array({"0"}));

    // huge coefficients survive as strings
    json big;
    to_json(big, IntPoly::monomial(1, hdet::pow_int(10, 30)));
    REQUIRE(big[1].get<std::string>() == "1000000000000000000000000000000");
}

TEST_CASE("polynomial JSON round-trips", "[json]") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coeff(-1000, 1000);
    std::uniform_int_distribution<int> deg(-1, 12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> c;
        const int d = deg(rng);
        for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
        const IntPoly f(std::move(c));
        json j;
        to_json(j, f);
        IntPoly back;
        from_json(j, back);
        REQUIRE(back == f);
    }
    // unnormalized input is accepted and normalized
    IntPoly padded;
    from_json(json::array({"1", "2", "0", "0"}), padded);
    REQUIRE(padded == IntPoly({1, 2}));

    IntPoly bad;
    REQUIRE_THROWS_AS(from_json(json::object(), bad), std::invalid_argument);
    REQUIRE_THROWS_AS(from_json(json::array(), bad), std::invalid_argument);
}

TEST_CASE("certificates round-trip through JSON", "[json]") {
    for (std::int64_t n : {9, 15, 27, 45, 225}) {
        const auto cert = hdet::composite_certificate(n);
        json j;
        to_json(j, cert);
        hdet::CompositeCertificate back;
        from_json(j, back);
        REQUIRE(back.n == cert.n);
        REQUIRE(back.dependence == cert.dependence);
        REQUIRE(hdet::verify_certificate(back));
    }

    json j;
    to_json(j, hdet::composite_certificate(9));
    REQUIRE(j["kind"] == "square");
    REQUIRE(j["parameters"]["m"] == 3);

    json j15;
    to_json(j15, hdet::composite_certificate(15));
    REQUIRE(j15["kind"] == "odd_prime_power");
    REQUIRE(j15["parameters"]["p"] == 3);
    REQUIRE(j15["parameters"]["e"] == 0);
    REQUIRE(j15["parameters"]["q"] == 5);

    j15["kind"] = "mystery";
    hdet::CompositeCertificate bad;
    REQUIRE_THROWS_AS(from_json(j15, bad), std::invalid_argument);
}

TEST_CASE("tampering with certificate JSON is caught by verification", "[json]") {
    json j;
    to_json(j, hdet::composite_certificate(15));
    j["dependence"][0][1] = json::array({"3"});  // coefficient 1 -> 3
    hdet::CompositeCertificate cert;
    from_json(j, cert);
    REQUIRE_FALSE(hdet::verify_certificate(cert));
}

TEST_CASE("spectrum reports serialize with nullable optionals", "[json]") {
    json j5;
    to_json(j5, hdet::spectrum_check(5));
    REQUIRE(j5["p"] == 5);
    REQUIRE(j5["det_C"] == "5");
    REQUIRE(j5["char_poly_B"] == json::array({"5", "0", "-6", "0", "1"}));
    REQUIRE(j5["all_ok"] == true);
    REQUIRE(j5["chapman_plus"].is_null());
    REQUIRE(j5["cofactors_equal"] == true);

    json j7;
    to_json(j7, hdet::spectrum_check(7));
    REQUIRE(j7["chapman_plus"] == "-1");
    REQUIRE(j7["chapman_minus"] == "-1");

    json skipped;
    to_json(skipped, hdet::spectrum_check(11, false));
    REQUIRE(skipped["cofactors_equal"].is_null());
    REQUIRE(skipped["all_ok"] == true);
}

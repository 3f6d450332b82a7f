#pragma once

#include <hdet/certificates.hpp>
#include <hdet/integer.hpp>
#include <hdet/poly.hpp>
#include <hdet/spectral.hpp>

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// JSON bindings for the public value types. Polynomials serialize as
// little-endian arrays of decimal strings (index k holds the x^k
// coefficient) so that consumers never parse integers wider than their
// native types expect; the zero polynomial serializes as ["0"].

namespace hdet {

inline void to_json(nlohmann::json& j, const IntPoly& f) {
    j = nlohmann::json::array();
    if (f.is_zero()) {
        j.push_back("0");
        return;
    }
    for (std::int64_t k = 0; k <= f.degree(); ++k) j.push_back(to_string(f.coeff(k)));
}

inline void from_json(const nlohmann::json& j, IntPoly& f) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("polynomial JSON must be a non-empty array");
    std::vector<Int> coeffs;
    coeffs.reserve(j.size());
    for (const auto& entry : j) coeffs.emplace_back(entry.get<std::string>());
    f = IntPoly(std::move(coeffs));
}

inline void to_json(nlohmann::json& j, const CompositeCertificate& cert) {
    j = nlohmann::json::object();
    j["n"] = cert.n;
    if (const auto* sq = std::get_if<SquareCase>(&cert.kind)) {
        j["kind"] = "square";
        j["parameters"] = {{"m", sq->m}};
    } else {
        const auto& op = std::get<OddPowerCase>(cert.kind);
        j["kind"] = "odd_prime_power";
        j["parameters"] = {{"p", op.p}, {"e", op.e}, {"q", op.q}};
    }
    j["dependence"] = nlohmann::json::array();
    for (const auto& [row, coeff] : cert.dependence) {
        nlohmann::json poly;
        to_json(poly, coeff);
        j["dependence"].push_back(nlohmann::json::array({row, poly}));
    }
}

inline void from_json(const nlohmann::json& j, CompositeCertificate& cert) {
    cert.n = j.at("n").get<std::int64_t>();
    const std::string kind = j.at("kind").get<std::string>();
    const auto& params = j.at("parameters");
    if (kind == "square") {
        cert.kind = SquareCase{params.at("m").get<std::int64_t>()};
    } else if (kind == "odd_prime_power") {
        cert.kind = OddPowerCase{params.at("p").get<std::int64_t>(), params.at("e").get<unsigned>(),
                                 params.at("q").get<std::int64_t>()};
    } else {
        throw std::invalid_argument("certificate JSON: unknown kind \"" + kind + "\"");
    }
    cert.dependence.clear();
    for (const auto& entry : j.at("dependence")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("certificate JSON: dependence entries must be [row, poly] pairs");
        IntPoly coeff;
        from_json(entry.at(1), coeff);
        cert.dependence.emplace_back(entry.at(0).get<std::int64_t>(), std::move(coeff));
    }
}

inline void to_json(nlohmann::json& j, const SpectrumReport& rep) {
    j = nlohmann::json::object();
    j["p"] = rep.p;
    j["det_C"] = to_string(rep.det_C);
    to_json(j["char_poly_B"], rep.char_poly_B);
    to_json(j["expected_char_poly"], rep.expected);
    j["det_ok"] = rep.det_ok;
    j["char_poly_ok"] = rep.char_poly_ok;
    j["w1_ok"] = rep.w1_ok;
    j["w2_ok"] = rep.w2_ok;
    j["cofactors_equal"] = rep.cofactors_equal ? nlohmann::json(*rep.cofactors_equal) : nlohmann::json(nullptr);
    j["chapman_plus"] = rep.chapman_plus ? nlohmann::json(to_string(*rep.chapman_plus)) : nlohmann::json(nullptr);
    j["chapman_minus"] = rep.chapman_minus ? nlohmann::json(to_string(*rep.chapman_minus)) : nlohmann::json(nullptr);
    j["all_ok"] = rep.all_ok();
}

}  // namespace hdet

// hankeldet: exact computation and verification of the Hankel
// determinants H_n(x) built from Jacobi-symbol polynomials, plus the
// spectral and character-sum machinery behind the prime/composite
// dichotomy. Subcommands:
//
//   compute  -n N --method direct|interp|closed|all [--format text|json]
//   certify  -n N                 explicit vanishing certificate, verified
//   spectrum -p P                 exact spectral report for B_p, C_p, A_p
//   verify   --max-p B            run the named verification suites
//
// Exit codes: 0 success, 1 a mathematical claim failed verification,
// 2 usage error. HANKELDET_THREADS overrides evaluation concurrency.

#include <hdet/arith.hpp>
#include <hdet/certificates.hpp>
#include <hdet/cyclo.hpp>
#include <hdet/hankel.hpp>
#include <hdet/identities.hpp>
#include <hdet/json_io.hpp>
#include <hdet/linalg.hpp>
#include <hdet/poly.hpp>
#include <hdet/spectral.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace {

using hdet::Int;
using hdet::IntPoly;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned thread_count() {
    if (const char* env = std::getenv("HANKELDET_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
        std::cerr << "warning: ignoring HANKELDET_THREADS=" << env << " (expected 1..256)\n";
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : std::min(hw, 8u);
}

void write_out(const std::string& path, const json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open --out file: " + path);
    out << j.dump(2) << "\n";
}

void require_odd(std::int64_t n) {
    if (n < 1 || n % 2 == 0) throw UsageError("n must be a positive odd integer (got " + std::to_string(n) + ")");
}

// ---- compute ----

int run_compute(std::int64_t n, const std::string& method, const std::string& format, const std::string& out_path) {
    require_odd(n);
    if (n == 1) {
        std::cerr << "warning: n = 1 accepted by convention; the prime/composite dichotomy concerns odd n >= 3\n";
        json j{{"n", 1}, {"H", json::array({"1"})}};
        if (format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << "H_1(x) = 1\n";
        write_out(out_path, j);
        return 0;
    }
    const bool prime = hdet::is_prime(n);
    if (method == "closed" && !prime)
        throw UsageError("--method closed requires prime n; " + std::to_string(n) + " is composite (try certify)");

    std::vector<std::pair<std::string, IntPoly>> results;
    if (method == "direct" || method == "all")
        results.emplace_back("direct", hdet::det_direct(hdet::build_hankel(n)));
    if (method == "interp" || method == "all")
        results.emplace_back("interp", hdet::det_interp(n, thread_count()));
    if (method == "closed" || (method == "all" && prime))
        results.emplace_back("closed", hdet::closed_form(n));

    bool agree = true;
    for (const auto& [name, poly] : results) agree = agree && poly == results.front().second;

    json j{{"n", n}, {"methods", json::object()}};
    for (const auto& [name, poly] : results) {
        json arr;
        to_json(arr, poly);
        j["methods"][name] = arr;
    }
    if (method == "all") j["agreement"] = agree;

    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "H_" << n << "(x) = " << results.front().second.str() << "\n";
        if (method == "all") {
            if (!agree) {
                std::cout << "agreement: FAILED\n";
                for (const auto& [name, poly] : results) std::cout << "  " << name << ": " << poly.str() << "\n";
            } else if (prime) {
                std::cout << "agreement: direct = interp = closed (" << n << " is prime)\n";
            } else {
                std::cout << "agreement: direct = interp = 0; closed form not applicable (" << n << " is composite)\n";
            }
        }
    }
    write_out(out_path, j);
    return agree ? 0 : 1;
}

// ---- certify ----

int run_certify(std::int64_t n, const std::string& format, const std::string& out_path) {
    require_odd(n);
    if (n == 1 || hdet::is_prime(n))
        throw UsageError("certify requires an odd composite n (got " + std::to_string(n) + ")");
    const hdet::CompositeCertificate cert = hdet::composite_certificate(n);
    const bool ok = hdet::verify_certificate(cert);

    json j;
    to_json(j, cert);
    json wrapped{{"certificate", j}, {"verified", ok}};
    if (format == "json") {
        std::cout << wrapped.dump(2) << "\n";
    } else {
        if (const auto* sq = std::get_if<hdet::SquareCase>(&cert.kind)) {
            std::cout << "n = " << n << " = " << sq->m << "^2 (perfect square case)\n";
        } else {
            const auto& op = std::get<hdet::OddPowerCase>(cert.kind);
            std::cout << "n = " << n << " = " << op.p << "^" << (2 * op.e + 1) << " * " << op.q
                      << " (odd-power case: p = " << op.p << " divides n to an odd power, q = " << op.q << ")\n";
        }
        std::cout << "row dependence (row index, coefficient):\n";
        for (const auto& [row, coeff] : cert.dependence)
            std::cout << "  r_" << row << "  *  " << coeff.str() << "\n";
        std::cout << "verified: " << (ok ? "true" : "false") << "\n";
    }
    write_out(out_path, wrapped);
    return ok ? 0 : 1;
}

// ---- spectrum ----

int run_spectrum(std::int64_t p, bool skip_cofactors, const std::string& format, const std::string& out_path) {
    if (p < 3 || p % 2 == 0 || !hdet::is_prime(p))
        throw UsageError("spectrum requires an odd prime p (got " + std::to_string(p) + ")");
    if (!skip_cofactors && p > 37)
        std::cerr << "note: the exhaustive cofactor sweep is O(p^2) determinants; --skip-cofactors to omit\n";
    const hdet::SpectrumReport rep = hdet::spectrum_check(p, !skip_cofactors);

    json j;
    to_json(j, rep);
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "p = " << p << "\n";
        std::cout << "det C_p = " << hdet::to_string(rep.det_C) << (rep.det_ok ? "  (matches (-1)^((p-1)/2) p^((p-3)/2))" : "  MISMATCH") << "\n";
        std::cout << "char poly B_p = " << rep.char_poly_B.str() << "\n";
        std::cout << "expected      = " << rep.expected.str() << (rep.char_poly_ok ? "" : "  MISMATCH") << "\n";
        const bool sym = p % 4 == 1;
        std::cout << "w1 relations (C w1 = w1" << (sym ? ", B w1 = w1" : ", B w1 = -w2") << "): "
                  << (rep.w1_ok ? "ok" : "FAILED") << "\n";
        std::cout << "w2 relations (C w2 = -w2" << (sym ? ", B w2 = -w2" : ", B w2 = w1") << "): "
                  << (rep.w2_ok ? "ok" : "FAILED") << "\n";
        if (rep.cofactors_equal)
            std::cout << "all cofactors of A_p equal: " << (*rep.cofactors_equal ? "ok" : "FAILED") << "\n";
        else
            std::cout << "all cofactors of A_p equal: skipped\n";
        if (rep.chapman_plus)
            std::cout << "Chapman determinants (+/-): " << hdet::to_string(*rep.chapman_plus) << ", "
                      << hdet::to_string(*rep.chapman_minus) << "\n";
        std::cout << (rep.all_ok() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    write_out(out_path, j);
    return rep.all_ok() ? 0 : 1;
}

// ---- verify ----

struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
};

template <typename F>
void check(SuiteResult& r, F&& cond, const std::string& what) {
    ++r.checks;
    if (!cond()) {
        ++r.failures;
        std::cerr << "FAIL [" << r.name << "] " << what << "\n";
    }
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound, std::int64_t lo = 3) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = lo; p <= bound; p += 2)
        if (hdet::is_prime(p)) out.push_back(p);
    return out;
}

SuiteResult suite_dichotomy(std::int64_t bound) {
    SuiteResult r{"dichotomy"};
    const unsigned threads = thread_count();
    for (std::int64_t n = 3; n <= std::min<std::int64_t>(bound, 21); n += 2) {
        const IntPoly h = hdet::det_interp(n, threads);
        if (hdet::is_prime(n)) {
            check(r, [&] { return !h.is_zero() && h == hdet::closed_form(n); },
                  "H_" + std::to_string(n) + " nonzero and equal to the closed form");
        } else {
            check(r, [&] { return h.is_zero(); }, "H_" + std::to_string(n) + " = 0 for composite n");
        }
    }
    for (std::int64_t p : primes_up_to(bound)) {
        const IntPoly h = hdet::closed_form(p);
        Int lead = hdet::pow_int(p, static_cast<std::uint64_t>((p - 3) / 2));
        if ((p - 1) / 2 % 2 != 0) lead = -lead;
        check(r, [&] { return h.degree() == p - 1 && h.coeff(0) == 0 && h.coeff(1) == 0 && h.leading() == lead; },
              "closed form shape at p = " + std::to_string(p));
        if (p % 4 == 1)
            check(r, [&] { return h(Int(1)) == 0 && h(Int(-1)) == 0; },
                  "H_p(1) = H_p(-1) = 0 for p = " + std::to_string(p) + " (p = 1 mod 4)");
    }
    return r;
}

SuiteResult suite_certificates(std::int64_t bound) {
    SuiteResult r{"certificates"};
    for (std::int64_t n = 9; n <= bound; n += 2) {
        if (hdet::is_prime(n)) continue;
        check(r, [&] { return hdet::verify_certificate(hdet::composite_certificate(n)); },
              "certificate for n = " + std::to_string(n));
    }
    return r;
}

SuiteResult suite_spectrum(std::int64_t bound) {
    SuiteResult r{"spectrum"};
    for (std::int64_t p : primes_up_to(std::min<std::int64_t>(bound, 31))) {
        const hdet::SpectrumReport rep = hdet::spectrum_check(p, p <= 23);
        check(r, [&] { return rep.all_ok(); }, "spectrum report at p = " + std::to_string(p));
        for (std::int64_t rr = 0; rr < p; ++rr)
            check(r, [&] { return hdet::circulant_eigen_check(p, rr); },
                  "circulant relation at p = " + std::to_string(p) + ", r = " + std::to_string(rr));
    }
    return r;
}

SuiteResult suite_gauss(std::int64_t bound) {
    SuiteResult r{"gauss"};
    for (std::int64_t p : primes_up_to(std::min<std::int64_t>(bound, 61))) {
        const hdet::CycloElem g1 = hdet::gauss_sum(p, 1);
        const hdet::CycloElem target = hdet::CycloElem::from_int(p, (p % 4 == 1) ? Int(p) : Int(-p));
        for (std::int64_t rr = 1; rr < p; ++rr) {
            const hdet::CycloElem g = hdet::gauss_sum(p, rr);
            check(r, [&] { return g * g == target; }, "g_r^2 at p = " + std::to_string(p) + ", r = " + std::to_string(rr));
            if (hdet::legendre(rr, p).value() == -1)
                check(r, [&] { return g + g1 == hdet::CycloElem(p); },
                      "g_r = -g_1 for nonresidue r, p = " + std::to_string(p));
            else
                check(r, [&] { return g == g1; }, "g_r = g_1 for residue r, p = " + std::to_string(p));
        }
    }
    return r;
}

SuiteResult suite_identities(std::int64_t bound, std::uint64_t seed) {
    SuiteResult r{"identities"};
    for (std::int64_t p : primes_up_to(std::min<std::int64_t>(bound, 101))) {
        bool orth = true;
        for (std::int64_t i = 0; i < p && orth; ++i)
            for (std::int64_t j = 0; j < p && orth; ++j)
                orth = hdet::orthogonality(p, i, j) == (i == j ? Int(p - 1) : Int(-1));
        check(r, [&] { return orth; }, "orthogonality sweep at p = " + std::to_string(p));

        bool rows = true;
        for (std::int64_t i = 1; i < p && rows; ++i)
            rows = hdet::shifted_product_sum(p, i) == -1 &&
                   hdet::nonresidue_row_sum(p, i) == Int((1 - hdet::legendre(i, p).value()) / 2);
        check(r, [&] { return rows; }, "row-sum identities at p = " + std::to_string(p));

        if (p % 4 == 1) {
            check(r, [&] { return hdet::weighted_residue_sum(p) == 0; },
                  "weighted residue sum at p = " + std::to_string(p));
            check(r, [&] { return hdet::alternating_sum_check(p); },
                  "alternating sum at p = " + std::to_string(p));
        }

        const hdet::DivisibilityReport rep = hdet::divisibility_report(p);
        check(r, [&] { return p % 4 != 3 || (rep.b_shift_ok && *rep.b_shift_ok); },
              "quotient coefficients b_{k+2} at p = " + std::to_string(p));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-50, 50);
    for (std::int64_t p : primes_up_to(std::min<std::int64_t>(bound, 53))) {
        bool ok = true;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            std::vector<Int> f(static_cast<std::size_t>(p));
            for (auto& v : f) v = dist(rng);
            ok = hdet::f_transform_check(p, f);
        }
        check(r, [&] { return ok; }, "random F transform at p = " + std::to_string(p));
    }
    return r;
}

SuiteResult suite_chapman(std::int64_t bound) {
    SuiteResult r{"chapman"};
    for (std::int64_t p : primes_up_to(std::min<std::int64_t>(bound, 31), 7)) {
        if (p % 4 != 3) continue;
        check(r, [&] { return hdet::chapman_det(p, +1) == -1 && hdet::chapman_det(p, -1) == -1; },
              "Chapman determinants at p = " + std::to_string(p));
    }
    return r;
}

SuiteResult suite_numeric(std::int64_t bound, double tol) {
    SuiteResult r{"numeric"};
    for (std::int64_t p : {5, 13, 17}) {
        if (p > bound) continue;
        bool ok = hdet::real_cosine_family_spotcheck(p, tol);
        for (std::int64_t rr = 1; rr <= (p - 1) / 2 && ok; ++rr)
            ok = hdet::real_eigenvector_spotcheck(p, rr, tol);
        check(r, [&] { return ok; }, "real eigenvector families at p = " + std::to_string(p));
    }
    return r;
}

int run_verify(std::int64_t bound, const std::string& suite, std::uint64_t seed, double tol,
               const std::string& format, const std::string& out_path) {
    if (bound < 3) throw UsageError("--max-p must be at least 3");
    std::vector<SuiteResult> results;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("dichotomy")) results.push_back(suite_dichotomy(bound));
    if (want("certificates")) results.push_back(suite_certificates(bound));
    if (want("spectrum")) results.push_back(suite_spectrum(bound));
    if (want("gauss")) results.push_back(suite_gauss(bound));
    if (want("identities")) results.push_back(suite_identities(bound, seed));
    if (want("chapman")) results.push_back(suite_chapman(bound));
    if (want("numeric")) results.push_back(suite_numeric(bound, tol));
    if (results.empty()) throw UsageError("unknown suite: " + suite);

    long total = 0, failed = 0;
    json j{{"max_p", bound}, {"suites", json::array()}};
    for (const auto& r : results) {
        total += r.checks;
        failed += r.failures;
        j["suites"].push_back({{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}});
    }
    j["ok"] = failed == 0;

    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results)
            std::cout << r.name << ": " << (r.checks - r.failures) << "/" << r.checks << " checks passed\n";
        std::cout << (failed == 0 ? "all suites passed" : "FAILURES DETECTED") << " (" << (total - failed) << "/"
                  << total << ")\n";
    }
    write_out(out_path, j);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hankel determinants of Jacobi-symbol polynomials, with verifiable certificates"};
    app.require_subcommand(1);

    std::int64_t n = 0, p = 0, max_p = 31;
    std::string method = "all", format = "text", out_path, suite = "all";
    std::uint64_t seed = 12345;
    double tolerance = 1e-9;
    bool skip_cofactors = false;

    auto* cmp = app.add_subcommand("compute", "compute H_n(x) by one or all methods");
    cmp->add_option("-n,--n", n, "odd n >= 1")->required();
    cmp->add_option("--method", method, "direct | interp | closed | all (default all)")
        ->check(CLI::IsMember({"direct", "interp", "closed", "all"}));
    cmp->add_option("--format", format, "text | json (default text)")->check(CLI::IsMember({"text", "json"}));
    cmp->add_option("--out", out_path, "also write the JSON report to FILE");

    auto* cert = app.add_subcommand("certify", "produce and verify a vanishing certificate for odd composite n");
    cert->add_option("-n,--n", n, "odd composite n >= 9")->required();
    cert->add_option("--format", format, "text | json (default text)")->check(CLI::IsMember({"text", "json"}));
    cert->add_option("--out", out_path, "also write the JSON certificate to FILE");

    auto* spectrum = app.add_subcommand("spectrum", "exact spectral report for an odd prime p");
    spectrum->add_option("-p,--p", p, "odd prime")->required();
    spectrum->add_flag("--skip-cofactors", skip_cofactors, "omit the exhaustive O(p^2) cofactor sweep");
    spectrum->add_option("--format", format, "text | json (default text)")->check(CLI::IsMember({"text", "json"}));
    spectrum->add_option("--out", out_path, "also write the JSON report to FILE");

    auto* ver = app.add_subcommand("verify", "run the verification suites up to a bound");
    ver->add_option("--max-p", max_p, "bound for primes/odd n (default 31)");
    ver->add_option("--suite", suite,
                    "all | dichotomy | certificates | spectrum | gauss | identities | chapman | numeric");
    ver->add_option("--seed", seed, "seed for randomized checks (default 12345)");
    ver->add_option("--tolerance", tolerance, "tolerance for numeric spot checks (default 1e-9)");
    ver->add_option("--format", format, "text | json (default text)")->check(CLI::IsMember({"text", "json"}));
    ver->add_option("--out", out_path, "also write the JSON summary to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmp->parsed()) return run_compute(n, method, format, out_path);
        if (cert->parsed()) return run_certify(n, format, out_path);
        if (spectrum->parsed()) return run_spectrum(p, skip_cofactors, format, out_path);
        return run_verify(max_p, suite, seed, tolerance, format, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

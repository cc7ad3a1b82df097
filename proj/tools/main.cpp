// mockeis — exact q-expansions, Hurwitz class numbers, and prime-power
// congruence verification from the command line.
//
// Exit codes: 0 = verified / produced, 1 = mathematical mismatch,
//             2 = usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mockeis/cache.hpp"
#include "mockeis/completion.hpp"
#include "mockeis/eisenstein.hpp"
#include "mockeis/padic.hpp"
#include "mockeis/parallel.hpp"
#include "mockeis/qseries.hpp"

namespace {

using namespace mockeis;
using nlohmann::json;

// ------------------------------------------------------------------ output

void emit(const std::string& artifact, const std::string& out_path) {
    const char* tail = artifact.empty() || artifact.back() != '\n' ? "\n" : "";
    if (out_path.empty()) {
        std::cout << artifact << tail;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << artifact << tail;
    if (!out.flush()) throw std::invalid_argument("failed writing '" + out_path + "'");
}

json cert_json(const CongruenceCertificate& cert) { return json::parse(to_json(cert)); }

// ------------------------------------------------------------- subcommands

int run_eisenstein(const std::string& weight, std::int64_t N, const std::string& format,
                   const std::string& out, unsigned threads) {
    const HalfIntWeight k = HalfIntWeight::parse(weight);
    const QExpansion series = cohen_series(k, N, threads);
    emit(format == "csv" ? to_csv(series) : to_json(series), out);
    return 0;
}

int run_hurwitz(std::int64_t N, const std::string& format, const std::string& out,
                unsigned threads) {
    if (N < 0) throw std::invalid_argument("precision must be >= 0");
    std::vector<Rational> by_forms(static_cast<std::size_t>(N) + 1);
    std::vector<Rational> by_L(static_cast<std::size_t>(N) + 1);
    parallel_for(N + 1, threads, [&](std::int64_t n) {
        by_forms[static_cast<std::size_t>(n)] = hurwitz_forms(n);
        by_L[static_cast<std::size_t>(n)] = hurwitz_L(n);
    });
    for (std::int64_t n = 0; n <= N; ++n) {
        if (by_forms[static_cast<std::size_t>(n)] != by_L[static_cast<std::size_t>(n)]) {
            std::cerr << "hurwitz: form count and L-value disagree at n=" << n << ": "
                      << to_string(by_forms[static_cast<std::size_t>(n)]) << " vs "
                      << to_string(by_L[static_cast<std::size_t>(n)]) << "\n";
            return 1;
        }
    }
    if (format == "csv") {
        std::string csv = "n,H,12H\n";
        for (std::int64_t n = 0; n <= N; ++n) {
            const Rational& h = by_forms[static_cast<std::size_t>(n)];
            const Rational twelve = Rational(12) * h;
            csv += std::to_string(n) + "," + to_string(h) + "," + to_string(twelve) + "\n";
        }
        emit(csv, out);
    } else {
        json rows = json::array();
        for (std::int64_t n = 0; n <= N; ++n) {
            const Rational& h = by_forms[static_cast<std::size_t>(n)];
            const Rational twelve = Rational(12) * h;
            rows.push_back(json::array({n, to_string(h), twelve.get_num().get_si()}));
        }
        emit(json{{"precision", N}, {"rows", std::move(rows)}}.dump(), out);
    }
    return 0;
}

int run_verify(std::int64_t p, int l, std::int64_t N, bool uncorrected, bool deep,
               const std::string& out, unsigned threads) {
    if (l > 2 && !deep)
        throw std::invalid_argument("l >= 3 needs very large Bernoulli numbers; pass --deep to confirm");
    const CongruenceCertificate cert = verify_completion(p, l, N, uncorrected, threads);
    emit(to_json(cert), out);
    if (!cert.pass)
        std::cerr << "verify: fail at " << cert.diffs.size() << " exponent(s) mod " << p << "^" << l
                  << "\n";
    return cert.pass ? 0 : 1;
}

int run_koblitz(const std::string& weight, std::int64_t p, std::int64_t N, const std::string& out,
                unsigned threads) {
    const HalfIntWeight k = HalfIntWeight::parse(weight);
    const CongruenceCertificate cert = koblitz_congruence_check(k, p, N, threads);
    emit(to_json(cert), out);
    if (!cert.pass)
        std::cerr << "checks koblitz: fail at " << cert.diffs.size() << " exponent(s)\n";
    return cert.pass ? 0 : 1;
}

int run_koblitz_negative(std::int64_t p, std::int64_t N, const std::string& out,
                         unsigned threads) {
    // The weight-3/2 series is NOT congruent to the weight 3/2 + (p-1) Cohen
    // series mod p; a nonempty diff list is the expected ("pass") outcome.
    const HalfIntWeight high(3 + 2 * (static_cast<int>(p) - 1));
    const QExpansion low = zagier_series(N, threads);
    const QExpansion cohen = cohen_series(high, N, threads);
    const ResidueSeries ra = reduce_mod(low, p, 1);
    const ResidueSeries rb = reduce_mod(cohen, p, 1);
    json diffs = json::array();
    for (std::int64_t n : compare(ra, rb))
        diffs.push_back(json::array({n, ra.residue(n), rb.residue(n)}));
    const bool pass = !diffs.empty();
    emit(json{{"N", N},
              {"diffs", std::move(diffs)},
              {"high_weight_twice_k", high.twice_k},
              {"low_weight_twice_k", 3},
              {"p", p},
              {"verdict", pass ? "pass" : "fail"}}
             .dump(),
         out);
    if (!pass) std::cerr << "checks koblitz-negative: series unexpectedly agree mod " << p << "\n";
    return pass ? 0 : 1;
}

int run_zeta(const std::vector<std::int64_t>& ps, const std::vector<int>& ls,
             const std::string& out) {
    json results = json::array();
    bool all_pass = true;
    for (std::int64_t p : ps) {
        for (int l : ls) {
            const CongruenceCertificate cert = zeta_scaling_check(p, l);
            all_pass = all_pass && cert.pass;
            results.push_back(cert_json(cert));
        }
    }
    emit(json{{"results", std::move(results)},
              {"suite", "zeta"},
              {"verdict", all_pass ? "pass" : "fail"}}
             .dump(),
         out);
    return all_pass ? 0 : 1;
}

int run_kummer(const std::vector<std::int64_t>& ps, const std::vector<int>& ls, std::int64_t dmax,
               const std::string& out) {
    json failures = json::array();
    std::int64_t cases = 0;
    for (std::int64_t D0 = 3; D0 <= dmax; ++D0) {
        if (!is_fundamental(D0)) continue;
        const QuadraticCharacter chi(D0);
        for (std::int64_t p : ps) {
            for (int l : ls) {
                const CongruenceCertificate cert = kummer_chain_check(chi, p, l);
                ++cases;
                if (!cert.pass) {
                    json f = cert_json(cert);
                    f["D0"] = D0;
                    failures.push_back(std::move(f));
                }
            }
        }
    }
    const bool all_pass = failures.empty();
    emit(json{{"cases", cases},
              {"failures", std::move(failures)},
              {"suite", "kummer"},
              {"verdict", all_pass ? "pass" : "fail"}}
             .dump(),
         out);
    return all_pass ? 0 : 1;
}

int run_proof(const std::vector<std::int64_t>& ps, const std::vector<int>& ls, std::int64_t mmax,
              const std::string& out) {
    json failures = json::array();
    json flagged = json::array();
    std::int64_t cases = 0;
    for (std::int64_t p : ps) {
        for (int l : ls) {
            for (std::int64_t m = 3; m <= mmax; ++m) {
                if (m % 4 != 0 && m % 4 != 3) continue;
                const CongruenceCertificate cert = proof_coefficient_congruence(m, p, l);
                ++cases;
                if (!cert.pass) failures.push_back(cert_json(cert));
                for (const auto& fl : cert.flagged)
                    flagged.push_back(json{{"exponent", fl.exponent},
                                           {"l", l},
                                           {"lhs", fl.lhs},
                                           {"p", p},
                                           {"rhs_decomposition", fl.rhs_decomposition},
                                           {"rhs_literal", fl.rhs_literal}});
            }
        }
    }
    const bool all_pass = failures.empty();
    emit(json{{"cases", cases},
              {"failures", std::move(failures)},
              {"flagged", std::move(flagged)},
              {"suite", "proof"},
              {"verdict", all_pass ? "pass" : "fail"}}
             .dump(),
         out);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Eisenstein q-expansions, Hurwitz class numbers, and p-adic congruence checks"};
    app.require_subcommand(1);

    unsigned threads = 0;
    std::string cache_dir;
    bool no_cache = false;
    app.add_option("--threads,-j", threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "Bernoulli cache directory (default: $MOCKEIS_CACHE_DIR)");
    app.add_flag("--no-cache", no_cache, "Disable the on-disk Bernoulli cache");

    // eisenstein
    auto* eis = app.add_subcommand("eisenstein", "Print a Cohen Eisenstein series E_k through q^N");
    std::string eis_weight;
    std::int64_t eis_N = 100;
    std::string eis_format = "json", eis_out;
    eis->add_option("--weight,-w", eis_weight, "Half-integral weight, e.g. 7/2")->required();
    eis->add_option("--precision,-N", eis_N, "Highest exponent N")->capture_default_str();
    eis->add_option("--format", eis_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    eis->add_option("--out,-o", eis_out, "Write the artifact to a file instead of stdout");

    // hurwitz
    auto* hur = app.add_subcommand("hurwitz", "Tabulate Hurwitz class numbers H(n), cross-checked");
    std::int64_t hur_N = 100;
    std::string hur_format = "json", hur_out;
    hur->add_option("--precision,-N", hur_N, "Highest index N")->capture_default_str();
    hur->add_option("--format", hur_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    hur->add_option("--out,-o", hur_out, "Write the artifact to a file instead of stdout");

    // verify
    auto* ver = app.add_subcommand(
        "verify", "Check the corrected weight-3/2 series against (1-p)/2 E_k mod p^l");
    std::int64_t ver_p = 0, ver_N = 100;
    int ver_l = 1;
    bool ver_uncorrected = false, ver_deep = false;
    std::string ver_out;
    ver->add_option("--prime,-p", ver_p, "Prime p >= 5")->required();
    ver->add_option("--level,-l", ver_l, "Congruence level l (modulus p^l)")->capture_default_str();
    ver->add_option("--precision,-N", ver_N, "Highest exponent N")->capture_default_str();
    ver->add_flag("--uncorrected", ver_uncorrected, "Compare the raw series, without the correction");
    ver->add_flag("--deep", ver_deep, "Allow l >= 3 (expensive Bernoulli indices)");
    ver->add_option("--out,-o", ver_out, "Write the certificate to a file instead of stdout");

    // checks
    auto* checks = app.add_subcommand("checks", "Batch congruence suites");
    checks->require_subcommand(1);

    auto* kob = checks->add_subcommand("koblitz", "E_k == E_{k+p-1} mod p, coefficientwise");
    std::string kob_weight, kob_out;
    std::int64_t kob_p = 0, kob_N = 100;
    kob->add_option("--weight,-w", kob_weight, "Half-integral weight >= 7/2")->required();
    kob->add_option("--prime,-p", kob_p, "Odd prime (3 allowed)")->required();
    kob->add_option("--precision,-N", kob_N, "Highest exponent N")->capture_default_str();
    kob->add_option("--out,-o", kob_out, "Write the certificate to a file instead of stdout");

    auto* kneg = checks->add_subcommand(
        "koblitz-negative", "Confirm the weight-3/2 series is NOT congruent to E_{3/2+(p-1)} mod p");
    std::int64_t kneg_p = 5, kneg_N = 12;
    std::string kneg_out;
    kneg->add_option("--prime,-p", kneg_p, "Prime p >= 5")->capture_default_str();
    kneg->add_option("--precision,-N", kneg_N, "Highest exponent N")->capture_default_str();
    kneg->add_option("--out,-o", kneg_out, "Write the report to a file instead of stdout");

    auto* zet = checks->add_subcommand("zeta", "-6 zeta(-1 - p^(l-1)(p-1)) == (1-p)/2 mod p^l");
    std::vector<std::int64_t> zet_p{5, 7, 11, 13};
    std::vector<int> zet_l{1, 2, 3};
    std::string zet_out;
    zet->add_option("--prime,-p", zet_p, "Primes, comma separated")->delimiter(',')->capture_default_str();
    zet->add_option("--level,-l", zet_l, "Levels, comma separated")->delimiter(',')->capture_default_str();
    zet->add_option("--out,-o", zet_out, "Write the report to a file instead of stdout");

    auto* kum = checks->add_subcommand("kummer", "L_p special-value congruence across the weight step");
    std::vector<std::int64_t> kum_p{5, 7};
    std::vector<int> kum_l{1, 2};
    std::int64_t kum_dmax = 100;
    std::string kum_out;
    kum->add_option("--prime,-p", kum_p, "Primes, comma separated")->delimiter(',')->capture_default_str();
    kum->add_option("--level,-l", kum_l, "Levels, comma separated")->delimiter(',')->capture_default_str();
    kum->add_option("--dmax", kum_dmax, "Check all fundamental -D0 with D0 <= dmax")
        ->capture_default_str();
    kum->add_option("--out,-o", kum_out, "Write the report to a file instead of stdout");

    auto* prf = checks->add_subcommand("proof", "Single-coefficient congruence at the proof weights");
    std::vector<std::int64_t> prf_p{7};
    std::vector<int> prf_l{1, 2};
    std::int64_t prf_mmax = 100;
    std::string prf_out;
    prf->add_option("--prime,-p", prf_p, "Primes, comma separated")->delimiter(',')->capture_default_str();
    prf->add_option("--level,-l", prf_l, "Levels, comma separated")->delimiter(',')->capture_default_str();
    prf->add_option("--mmax", prf_mmax, "Check all m <= mmax with m = 0, 3 (mod 4)")
        ->capture_default_str();
    prf->add_option("--out,-o", prf_out, "Write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::filesystem::path dir = no_cache ? std::filesystem::path{}
                                      : !cache_dir.empty() ? std::filesystem::path(cache_dir)
                                                           : default_cache_dir();
    if (!dir.empty()) load_bernoulli_cache(bernoulli_cache_file(dir));

    int code = 2;
    try {
        if (eis->parsed()) {
            code = run_eisenstein(eis_weight, eis_N, eis_format, eis_out, threads);
        } else if (hur->parsed()) {
            code = run_hurwitz(hur_N, hur_format, hur_out, threads);
        } else if (ver->parsed()) {
            code = run_verify(ver_p, ver_l, ver_N, ver_uncorrected, ver_deep, ver_out, threads);
        } else if (checks->parsed()) {
            if (kob->parsed())
                code = run_koblitz(kob_weight, kob_p, kob_N, kob_out, threads);
            else if (kneg->parsed())
                code = run_koblitz_negative(kneg_p, kneg_N, kneg_out, threads);
            else if (zet->parsed())
                code = run_zeta(zet_p, zet_l, zet_out);
            else if (kum->parsed())
                code = run_kummer(kum_p, kum_l, kum_dmax, kum_out);
            else if (prf->parsed())
                code = run_proof(prf_p, prf_l, prf_mmax, prf_out);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    }

    if (!dir.empty() && code != 2) save_bernoulli_cache(bernoulli_cache_file(dir));
    return code;
}

#include "mockeis/completion.hpp"

#include <stdexcept>

#include "mockeis/eisenstein.hpp"
#include "mockeis/numtheory.hpp"
#include "mockeis/parallel.hpp"

namespace mockeis {

namespace {

void require_completion_prime(std::int64_t p, const char* who) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error(std::string(who) + ": p must be a prime >= 5, got " +
                                std::to_string(p));
}

std::int64_t weight_step(std::int64_t p, int l) {
    std::int64_t s = p - 1;
    for (int i = 1; i < l; ++i) s *= p;
    return s;
}

}  // namespace

bool is_neg_square_mod(std::int64_t m, std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("is_neg_square_mod: p must be an odd prime");
    if (m < 0) throw std::domain_error("is_neg_square_mod: m must be >= 0");
    return m % p == 0 || kronecker(-m, p) == 1;
}

Rational correction_coefficient(std::int64_t m, std::int64_t p) {
    require_completion_prime(p, "correction_coefficient");
    if (m < 0) throw std::domain_error("correction_coefficient: m must be >= 0");
    if (m == 0) return make_rational(-(1 + p), 2);
    if (m % 4 == 1 || m % 4 == 2) return Rational(0);

    const auto [D0, f] = fundamental_decomposition(m);
    const QuadraticCharacter chi(D0);
    // strip p from the square part: m / p^(2 v_p(f)) = D0 (f / p^v)^2
    std::int64_t stable = m;
    for (std::int64_t g = f; g % p == 0; g /= p) stable /= p * p;

    Rational a = Rational(12) * hurwitz_forms(m) -
                 Rational(6 * (1 - chi(p))) * hurwitz_forms(stable);
    a.canonicalize();
    return a;
}

CorrectionSeries correction_series(std::int64_t p, std::int64_t N, unsigned threads) {
    require_completion_prime(p, "correction_series");
    if (N < 0) throw std::domain_error("correction_series: N must be >= 0");
    std::vector<Rational> values(static_cast<std::size_t>(N) + 1);
    parallel_for(N + 1, threads, [&](std::int64_t m) {
        values[static_cast<std::size_t>(m)] = correction_coefficient(m, p);
    });
    CorrectionSeries out;
    out.p = p;
    out.series.precision = N;
    for (std::int64_t m = 0; m <= N; ++m) {
        auto& v = values[static_cast<std::size_t>(m)];
        if (v != 0) out.series.coeffs.emplace(m, std::move(v));
    }
    return out;
}

QExpansion completed_series(std::int64_t p, std::int64_t N, unsigned threads) {
    return add(zagier_series(N, threads), correction_series(p, N, threads).series);
}

CongruenceCertificate verify_completion(std::int64_t p, int l, std::int64_t N, bool uncorrected,
                                        unsigned threads) {
    require_completion_prime(p, "verify_completion");
    if (l < 1) throw std::domain_error("verify_completion: l must be >= 1");
    if (N < 0) throw std::domain_error("verify_completion: N must be >= 0");

    const std::int64_t step = weight_step(p, l);
    const HalfIntWeight k(static_cast<int>(3 + 2 * step));

    QExpansion lhs = zagier_series(N, threads);
    CongruenceCertificate cert;
    cert.p = p;
    cert.l = l;
    cert.precision = N;
    cert.weight_twice_k = k.twice_k;
    if (!uncorrected) {
        const CorrectionSeries corr = correction_series(p, N, threads);
        for (const auto& [m, a] : corr.series.coeffs) cert.corrected_exponents.push_back(m);
        lhs = add(lhs, corr.series);
    }

    Rational half_scale(Integer(1 - p), Integer(2));
    half_scale.canonicalize();
    const QExpansion rhs = scale(half_scale, cohen_series(k, N, threads));

    const ResidueSeries ra = reduce_mod(lhs, p, l);
    const ResidueSeries rb = reduce_mod(rhs, p, l);
    for (std::int64_t n : compare(ra, rb)) cert.diffs.push_back({n, ra.residue(n), rb.residue(n)});
    cert.pass = cert.diffs.empty();
    return cert;
}

std::vector<std::int64_t> difference_support(std::int64_t p, int l, std::int64_t N,
                                             unsigned threads) {
    const CongruenceCertificate cert = verify_completion(p, l, N, /*uncorrected=*/true, threads);
    std::vector<std::int64_t> out;
    out.reserve(cert.diffs.size());
    for (const auto& d : cert.diffs) out.push_back(d.exponent);
    return out;
}

}  // namespace mockeis

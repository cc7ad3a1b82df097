#include "mockeis/eisenstein.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "mockeis/parallel.hpp"

namespace mockeis {

// -------------------------------------------------------------- weights

HalfIntWeight::HalfIntWeight(int twice_k_) : twice_k(twice_k_) {
    if (twice_k <= 0 || twice_k % 2 == 0)
        throw weight_out_of_range("half-integral weight needs an odd positive numerator, got " +
                                  std::to_string(twice_k) + "/2");
}

HalfIntWeight HalfIntWeight::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos || text.substr(slash) != "/2")
        throw std::invalid_argument("weight must look like '7/2', got '" + text + "'");
    const std::string num = text.substr(0, slash);
    std::size_t pos = num.size() > 0 && num[0] == '-' ? 1 : 0;
    if (pos == num.size() ||
        !std::all_of(num.begin() + pos, num.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("weight must look like '7/2', got '" + text + "'");
    return HalfIntWeight(std::stoi(num));
}

// ----------------------------------------------------------- Cohen series

namespace {

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t power = 1;
        for (int i = 0; i < e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void require_series_weight(HalfIntWeight k) {
    if (k.twice_k < 7)
        throw weight_out_of_range("series coefficients need weight >= 7/2, got " + k.str());
}

}  // namespace

Rational cohen_coefficient(std::int64_t n, HalfIntWeight k) {
    require_series_weight(k);
    if (n < 0) throw std::domain_error("cohen_coefficient: n must be >= 0");
    if (n == 0) return Rational(1);
    if (n % 4 == 1 || n % 4 == 2) return Rational(0);

    const int r = (k.twice_k - 3) / 2;  // k - 3/2
    const auto [D0, f] = fundamental_decomposition(n);
    const QuadraticCharacter chi(D0);

    Integer total = 0;
    for (std::int64_t d : divisors(f)) {
        const int mu = moebius(d);
        if (mu == 0) continue;
        const int ch = chi(d);
        if (ch == 0) continue;
        const Integer term =
            pow_integer(Integer(d), static_cast<unsigned long>(r)) * sigma(k.twice_k - 2, f / d);
        if (mu * ch > 0)
            total += term;
        else
            total -= term;
    }

    const Rational L = dirichlet_L_nonpositive(-r, chi);
    const Rational z = zeta_nonpositive(2 - k.twice_k);
    Rational c = L / z * Rational(total);
    c.canonicalize();
    return c;
}

QExpansion cohen_series(HalfIntWeight k, std::int64_t N, unsigned threads) {
    require_series_weight(k);
    if (N < 0) throw std::domain_error("cohen_series: N must be >= 0");
    // Build the Bernoulli table serially so the workers mostly read it.
    zeta_nonpositive(2 - k.twice_k);
    std::vector<Rational> values(static_cast<std::size_t>(N) + 1);
    parallel_for(N + 1, threads,
                 [&](std::int64_t n) { values[static_cast<std::size_t>(n)] = cohen_coefficient(n, k); });
    QExpansion out;
    out.precision = N;
    for (std::int64_t n = 0; n <= N; ++n) {
        auto& v = values[static_cast<std::size_t>(n)];
        if (v != 0) out.coeffs.emplace(n, std::move(v));
    }
    return out;
}

// -------------------------------------------------------- Hurwitz numbers

Rational hurwitz_forms(std::int64_t n) {
    if (n < 0) throw std::domain_error("hurwitz_forms: n must be >= 0");
    if (n == 0) return make_rational(-1, 12);
    if (n % 4 == 1 || n % 4 == 2) return Rational(0);

    // Weighted count of reduced forms (a, b, c), b^2 - 4ac = -n, |b| <= a <= c
    // (b >= 0 when |b| = a or a = c); forms proportional to (1,1,1) weigh 1/3,
    // to (1,0,1) weigh 1/2.  Enumerate b >= 0 and double when 0 < b < a < c.
    Rational total(0);
    for (std::int64_t b = n % 2; 3 * b * b <= n; b += 2) {
        const std::int64_t m = (n + b * b) / 4;  // = a * c
        for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= m; ++a) {
            if (m % a != 0) continue;
            const std::int64_t c = m / a;
            if (a == b && b == c)
                total += make_rational(1, 3);
            else if (b == 0 && a == c)
                total += make_rational(1, 2);
            else if (b > 0 && b < a && a < c)
                total += 2;
            else
                total += 1;
        }
    }
    return total;
}

Rational hurwitz_L(std::int64_t n) {
    if (n < 0) throw std::domain_error("hurwitz_L: n must be >= 0");
    if (n == 0) return make_rational(-1, 12);
    if (n % 4 == 1 || n % 4 == 2) return Rational(0);

    const auto [D0, f] = fundamental_decomposition(n);
    const QuadraticCharacter chi(D0);
    Integer total = 0;
    for (std::int64_t d : divisors(f)) {
        const int mu = moebius(d);
        if (mu == 0) continue;
        const int ch = chi(d);
        if (ch == 0) continue;
        const Integer term = sigma(1, f / d);
        if (mu * ch > 0)
            total += term;
        else
            total -= term;
    }
    Rational h = dirichlet_L_nonpositive(0, chi) * Rational(total);
    h.canonicalize();
    return h;
}

QExpansion zagier_series(std::int64_t N, unsigned threads) {
    if (N < 0) throw std::domain_error("zagier_series: N must be >= 0");
    std::vector<Rational> values(static_cast<std::size_t>(N) + 1);
    parallel_for(N + 1, threads, [&](std::int64_t m) {
        values[static_cast<std::size_t>(m)] = Rational(-12) * hurwitz_forms(m);
    });
    QExpansion out;
    out.precision = N;
    for (std::int64_t m = 0; m <= N; ++m) {
        auto& v = values[static_cast<std::size_t>(m)];
        v.canonicalize();
        if (v != 0) out.coeffs.emplace(m, std::move(v));
    }
    return out;
}

// ----------------------------------------------------- weight-step congruence

CongruenceCertificate koblitz_congruence_check(HalfIntWeight k, std::int64_t p, std::int64_t N,
                                               unsigned threads) {
    require_series_weight(k);
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::domain_error("koblitz_congruence_check: p must be an odd prime");
    if (N < 0) throw std::domain_error("koblitz_congruence_check: N must be >= 0");

    const QExpansion low = cohen_series(k, N, threads);
    const QExpansion high = cohen_series(k.plus_integer(static_cast<int>(p) - 1), N, threads);
    const ResidueSeries ra = reduce_mod(low, p, 1);
    const ResidueSeries rb = reduce_mod(high, p, 1);

    CongruenceCertificate cert;
    cert.p = p;
    cert.l = 1;
    cert.precision = N;
    cert.weight_twice_k = k.twice_k;
    for (std::int64_t n : compare(ra, rb)) cert.diffs.push_back({n, ra.residue(n), rb.residue(n)});
    cert.pass = cert.diffs.empty();
    return cert;
}

}  // namespace mockeis

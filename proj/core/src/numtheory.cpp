#include "mockeis/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace mockeis {

// ---------------------------------------------------------------- factoring

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's cycle variant of Pollard rho; deterministic seed sweep.
u64 pollard_brent(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int iter = 0;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mulmod(q, diff, n);
            if (++iter % 64 == 0) {
                d = std::gcd(q, n);
                if (d != 1) break;
            }
        }
        if (d == 1) d = std::gcd(q, n);
        if (d != 1 && d != n) return d;
        // cycle degenerated; retry with the next polynomial
    }
}

void factor_recursive(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_brent(n);
    factor_recursive(d, out);
    factor_recursive(n / d, out);
}

constexpr u64 kTrialBound = 1'000'000;

}  // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    std::map<u64, int> acc;
    u64 m = static_cast<u64>(n);
    for (u64 p : {2ull, 3ull, 5ull}) {
        while (m % p == 0) {
            ++acc[p];
            m /= p;
        }
    }
    for (u64 p = 7; p <= kTrialBound && p * p <= m; p += 6) {
        for (u64 q : {p, p + 4}) {  // 6k+1, 6k+5
            while (m % q == 0) {
                ++acc[q];
                m /= q;
            }
        }
    }
    if (m > 1) factor_recursive(m, acc);
    std::vector<std::pair<std::int64_t, int>> out;
    out.reserve(acc.size());
    for (const auto& [p, e] : acc) out.emplace_back(static_cast<std::int64_t>(p), e);
    return out;
}

bool is_prime(std::int64_t n) { return n >= 2 && miller_rabin(static_cast<u64>(n)); }

int moebius(std::int64_t n) {
    if (n < 1) throw std::domain_error("moebius: n must be >= 1");
    auto fac = factorize(n);
    for (const auto& [p, e] : fac)
        if (e > 1) return 0;
    return fac.size() % 2 == 0 ? 1 : -1;
}

Integer sigma(int r, std::int64_t n) {
    if (r < 0) throw std::domain_error("sigma: exponent must be >= 0");
    if (n < 1) throw std::domain_error("sigma: n must be >= 1");
    Integer total = 1;
    for (const auto& [p, e] : factorize(n)) {
        // 1 + p^r + ... + p^(re)
        Integer pr = pow_integer(Integer(p), static_cast<unsigned long>(r));
        Integer term = 1, power = 1;
        for (int i = 0; i < e; ++i) {
            power *= pr;
            term += power;
        }
        total *= term;
    }
    return total;
}

int kronecker(std::int64_t a, std::int64_t b) {
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (b & 1) == 0) return 0;
    // strip 2s from b, fold in (a|2) per factor
    int v = 0;
    while ((b & 1) == 0) {
        b /= 2;
        ++v;
    }
    int k = 1;
    if (v & 1) {
        int r = static_cast<int>(((a % 8) + 8) % 8);
        if (r == 3 || r == 5) k = -1;  // (a|2) = -1 for a == +-3 mod 8
        // r in {1,7}: +1; even r cannot occur here (a odd when b was even)
    }
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;  // (a|-1) = sign(a)
    }
    // invariant: b odd and positive
    while (a != 0) {
        if (a < 0) {
            a = -a;
            if (b % 4 == 3) k = -k;  // (-1|b)
        }
        v = 0;
        while ((a & 1) == 0) {
            a /= 2;
            ++v;
        }
        if (v & 1) {
            int r = static_cast<int>(b % 8);
            if (r == 3 || r == 5) k = -k;  // (2|b)
        }
        if ((a % 4 == 3) && (b % 4 == 3)) k = -k;  // quadratic reciprocity
        std::int64_t t = b % a;
        b = a;
        a = t;
    }
    return b == 1 ? k : 0;
}

// -------------------------------------------------- discriminant decomposition

bool is_fundamental(std::int64_t D0) {
    if (D0 < 3) return false;
    std::int64_t d = D0 % 4 == 0 ? D0 / 4 : D0;
    for (const auto& [p, e] : factorize(d))
        if (e > 1) return false;
    if (D0 % 4 == 3) return true;                         // -D0 == 1 (mod 4)
    if (D0 % 4 == 0) return d % 4 == 1 || d % 4 == 2;     // -D0 == 0 (mod 4), -d == 2,3 (mod 4)
    return false;                                         // D0 == 1, 2 (mod 4): -D0 not a discriminant
}

Decomposition fundamental_decomposition(std::int64_t n) {
    if (n < 3 || (n % 4 != 0 && n % 4 != 3))
        throw std::domain_error("fundamental_decomposition: need n >= 3 with n = 0, 3 (mod 4)");
    std::int64_t d = 1, s = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e & 1) d *= p;
        for (int i = 0; i < e / 2; ++i) s *= p;
    }
    if (d % 4 == 3) return {d, s};
    // squarefree part is 1 or 2 mod 4: the fundamental discriminant is -4d,
    // and n = 0 (mod 4) forces s even here.
    return {4 * d, s / 2};
}

QuadraticCharacter::QuadraticCharacter(std::int64_t D0) : D0_(D0) {
    if (!is_fundamental(D0))
        throw std::domain_error("QuadraticCharacter: -" + std::to_string(D0) +
                                " is not a fundamental discriminant");
}

// ------------------------------------------------------------- Bernoulli side

namespace {

std::shared_mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // contiguous table B_0..B_max

// Extend the table through index n (caller holds the exclusive lock).
// Ascending recurrence: B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j,
// restricted to j = 0, 1 and even j (odd B_j >= 3 vanish).
void extend_bernoulli_locked(int n) {
    if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);  // B_0
    if (n >= 1 && g_bernoulli.size() == 1) g_bernoulli.emplace_back(make_rational(-1, 2));
    while (static_cast<int>(g_bernoulli.size()) <= n) {
        int m = static_cast<int>(g_bernoulli.size());
        if (m & 1) {
            g_bernoulli.emplace_back(0);
            continue;
        }
        Rational acc(1);                                      // j = 0
        acc -= Rational(m + 1) / 2;                           // j = 1, B_1 = -1/2
        Integer binom;
        for (int j = 2; j <= m - 2; j += 2) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(j));
            acc += Rational(binom) * g_bernoulli[static_cast<std::size_t>(j)];
        }
        g_bernoulli.push_back(-acc / (m + 1));
    }
}

}  // namespace

Rational bernoulli(int n) {
    if (n < 0) throw std::domain_error("bernoulli: n must be >= 0");
    {
        std::shared_lock lock(g_bernoulli_mutex);
        if (n < static_cast<int>(g_bernoulli.size())) return g_bernoulli[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(g_bernoulli_mutex);
    extend_bernoulli_locked(n);
    return g_bernoulli[static_cast<std::size_t>(n)];
}

Rational bernoulli_poly(int n, const Rational& x) {
    if (n < 0) throw std::domain_error("bernoulli_poly: n must be >= 0");
    bernoulli(n);  // make sure the table covers 0..n
    std::shared_lock lock(g_bernoulli_mutex);
    // Horner: B_n(x) = sum_j C(n,j) B_j x^(n-j)
    Rational acc(1);  // C(n,0) B_0
    Integer binom;
    for (int j = 1; j <= n; ++j) {
        acc *= x;
        const Rational& bj = g_bernoulli[static_cast<std::size_t>(j)];
        if (bj != 0) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(j));
            acc += Rational(binom) * bj;
        }
    }
    return acc;
}

namespace {

std::shared_mutex g_genbern_mutex;
std::map<std::pair<std::int64_t, int>, Rational> g_genbern;  // (conductor, n) -> B_{n,chi}

}  // namespace

Rational generalized_bernoulli(int n, const QuadraticCharacter& chi) {
    if (n < 1) throw std::domain_error("generalized_bernoulli: n must be >= 1");
    const std::int64_t f = chi.conductor();
    const auto key = std::make_pair(f, n);
    {
        std::shared_lock lock(g_genbern_mutex);
        auto it = g_genbern.find(key);
        if (it != g_genbern.end()) return it->second;
    }
    Rational acc(0);
    for (std::int64_t a = 1; a <= f; ++a) {
        int ch = chi(a);
        if (ch == 0) continue;
        Rational val = bernoulli_poly(n, make_rational(a, f));
        acc += ch > 0 ? val : -val;
    }
    Rational result = Rational(pow_integer(Integer(f), static_cast<unsigned long>(n - 1))) * acc;
    result.canonicalize();
    std::unique_lock lock(g_genbern_mutex);
    auto [it, inserted] = g_genbern.emplace(key, result);
    return it->second;
}

Rational zeta_nonpositive(int s) {
    if (s > -1 || (s & 1) == 0)
        throw std::domain_error("zeta_nonpositive: need odd s <= -1, got s=" + std::to_string(s));
    int n = 1 - s;  // even, >= 2
    return -bernoulli(n) / n;
}

Rational dirichlet_L_nonpositive(int s, const QuadraticCharacter& chi) {
    if (s > 0) throw std::domain_error("dirichlet_L_nonpositive: need s <= 0");
    int n = 1 - s;  // >= 1
    return -generalized_bernoulli(n, chi) / n;
}

// ----------------------------------------------------------- cache plumbing

std::vector<std::pair<int, Rational>> bernoulli_table_snapshot() {
    std::shared_lock lock(g_bernoulli_mutex);
    std::vector<std::pair<int, Rational>> out;
    out.reserve(g_bernoulli.size());
    for (std::size_t i = 0; i < g_bernoulli.size(); ++i)
        out.emplace_back(static_cast<int>(i), g_bernoulli[i]);
    return out;
}

namespace {

// von Staudt-Clausen: for even n >= 2, B_n + sum of 1/q over primes q with
// (q-1) | n is an integer.  Catches both denominator and numerator damage.
bool vsc_ok(int n, const Rational& b) {
    Rational shifted = b;
    for (std::int64_t q = 2; q <= n + 1; ++q) {
        if (n % (q - 1) == 0 && is_prime(q)) shifted += Rational(1, q);
    }
    shifted.canonicalize();
    return shifted.get_den() == 1;
}

bool entry_valid(int n, const Rational& b) {
    if (b.get_den() <= 0) return false;
    Rational canon = b;
    canon.canonicalize();
    if (canon != b) return false;
    if (n == 0) return b == 1;
    if (n == 1) return b == make_rational(-1, 2);
    if (n & 1) return b == 0;
    return vsc_ok(n, b);
}

}  // namespace

std::size_t bernoulli_table_seed(const std::vector<std::pair<int, Rational>>& entries) {
    // accept only a structurally valid contiguous prefix starting at 0
    std::vector<Rational> table;
    table.reserve(entries.size());
    for (const auto& [n, b] : entries) {
        if (n != static_cast<int>(table.size()) || !entry_valid(n, b)) break;
        table.push_back(b);
    }
    if (table.empty()) return 0;
    const std::size_t accepted = table.size();
    std::unique_lock lock(g_bernoulli_mutex);
    if (table.size() > g_bernoulli.size()) g_bernoulli = std::move(table);
    return accepted;
}

void clear_number_caches() {
    {
        std::unique_lock lock(g_bernoulli_mutex);
        g_bernoulli.clear();
    }
    {
        std::unique_lock lock(g_genbern_mutex);
        g_genbern.clear();
    }
}

}  // namespace mockeis

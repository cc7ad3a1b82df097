#pragma once
/**
 * @file numtheory.hpp
 * @brief Elementary number theory: factorization, multiplicative functions,
 *        Kronecker symbols, quadratic characters, Bernoulli machinery and
 *        special values of zeta / Dirichlet L-functions at non-positive
 *        integers.  Everything is exact.
 *
 * Conventions:
 *   - Bernoulli numbers use B_1 = -1/2 (generating function t/(e^t - 1)).
 *   - For n >= 3 with n = 0, 3 (mod 4), fundamental_decomposition writes
 *     n = D0 * f^2 where -D0 is the discriminant of Q(sqrt(-n)).
 *   - The quadratic character attached to D0 is chi_{-D0}(m) = (-D0 | m),
 *     a real primitive character of conductor D0.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "mockeis/rational.hpp"

namespace mockeis {

// ---------------------------------------------------------------- factoring

/// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
/// Deterministic: trial division through 10^6, then Brent-Pollard rho with a
/// Miller-Rabin base set that is exact for 64-bit inputs.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Deterministic primality test for n >= 0 (exact on the full int64 range).
bool is_prime(std::int64_t n);

/// Moebius function; 0 when n is not squarefree.  Requires n >= 1.
int moebius(std::int64_t n);

/// Sum of r-th powers of the divisors of n (r >= 0, n >= 1).  Exact for any r.
Integer sigma(int r, std::int64_t n);

/// Full Kronecker symbol (a | b), defined for all integers including b <= 0.
int kronecker(std::int64_t a, std::int64_t b);

// -------------------------------------------------- discriminant decomposition

/// n = D0 * f^2 with -D0 the fundamental discriminant of Q(sqrt(-n)).
struct Decomposition {
    std::int64_t D0 = 0;
    std::int64_t f = 0;
};

/// Requires n >= 3 and n = 0 or 3 (mod 4); throws std::domain_error otherwise.
Decomposition fundamental_decomposition(std::int64_t n);

/// True when -D0 is a fundamental discriminant (D0 >= 3).
bool is_fundamental(std::int64_t D0);

/// The real primitive character chi_{-D0}(m) = (-D0 | m) of conductor D0.
class QuadraticCharacter {
  public:
    /// Requires -D0 fundamental; throws std::domain_error otherwise.
    explicit QuadraticCharacter(std::int64_t D0);

    int operator()(std::int64_t m) const { return kronecker(-D0_, m); }
    std::int64_t discriminant_magnitude() const { return D0_; }
    std::int64_t conductor() const { return D0_; }

  private:
    std::int64_t D0_;
};

// ------------------------------------------------------------- Bernoulli side

/// Bernoulli number B_n (B_1 = -1/2; zero for odd n >= 3).  Values are
/// memoized in a process-wide table built with the ascending recurrence
/// sum_{j=0}^{n} C(n+1, j) B_j = 0; the table supports concurrent readers
/// and serializes extension.
Rational bernoulli(int n);

/// Bernoulli polynomial B_n(x) = sum_j C(n,j) B_j x^(n-j).
Rational bernoulli_poly(int n, const Rational& x);

/// Generalized Bernoulli number B_{n,chi} = f^(n-1) sum_{a=1..f} chi(a) B_n(a/f)
/// with f the conductor of chi.  Memoized per (conductor, n).
Rational generalized_bernoulli(int n, const QuadraticCharacter& chi);

/// zeta(s) = -B_{1-s}/(1-s) for odd s <= -1; throws std::domain_error for
/// even or non-negative s (where this finite formula does not apply).
Rational zeta_nonpositive(int s);

/// L(s, chi) = -B_{1-s,chi}/(1-s) for s <= 0.
Rational dirichlet_L_nonpositive(int s, const QuadraticCharacter& chi);

// ----------------------------------------------------------- cache plumbing

/// Snapshot of the Bernoulli memo table: contiguous indices 0..max.
std::vector<std::pair<int, Rational>> bernoulli_table_snapshot();

/// Seed the Bernoulli table from previously computed entries.  The input must
/// be a structurally valid contiguous prefix (canonical rationals, B_0 = 1,
/// B_1 = -1/2, zeros at odd indices >= 3, and the von Staudt-Clausen
/// integrality B_n + sum 1/q in Z at even indices); entries failing
/// validation — and everything after them — are discarded.  Returns the
/// number of entries accepted.
std::size_t bernoulli_table_seed(const std::vector<std::pair<int, Rational>>& entries);

/// Drop all memoized number-theoretic state (Bernoulli table, character
/// memos).  Intended for cold-cache tests and benchmarks.
void clear_number_caches();

}  // namespace mockeis

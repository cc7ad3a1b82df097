#pragma once
/**
 * @file completion.hpp
 * @brief Correcting the weight-3/2 Eisenstein series into a p-adic modular form.
 *
 * For an odd prime p >= 5 the series 1 - 12 sum H(m) q^m becomes a p-adic
 * modular form after adding a correction supported on exponents congruent
 * to -n^2 mod p:
 *
 *   a_0 = -(1+p)/2,
 *   a_m = 12 H(m) - 6 (1 - chi_{-D0}(p)) H(m / p^(2v))     (m >= 1),
 *
 * where m = D0 f^2 and v = v_p(f).  Away from p | f this collapses to
 *   a_m = 12 H(m)  when chi_{-D0}(p) = 1,
 *   a_m =  6 H(m)  when chi_{-D0}(p) = 0,
 *   a_m =  0       when chi_{-D0}(p) = -1,
 * so the correction is supported exactly on m = -n^2 (mod p).  The completed
 * series agrees with (1-p)/2 * E_{k_l} coefficient-wise mod p^l for the
 * weights k_l = 3/2 + p^(l-1)(p-1), every l >= 1; verify_completion checks
 * this congruence exponent by exponent and returns a certificate.
 */

#include <cstdint>
#include <vector>

#include "mockeis/certificate.hpp"
#include "mockeis/qseries.hpp"
#include "mockeis/rational.hpp"

namespace mockeis {

/// True when m == -n^2 (mod p) for some n (0 counts: p | m qualifies).
bool is_neg_square_mod(std::int64_t m, std::int64_t p);

/// Correction coefficient a_m as above.  Requires p >= 5 prime, m >= 0.
/// The values are p-adic integers; nonzero ones occur only at exponents
/// with is_neg_square_mod(m, p).
Rational correction_coefficient(std::int64_t m, std::int64_t p);

/// The correction sum_{m <= N} a_m q^m for a fixed prime.
struct CorrectionSeries {
    std::int64_t p = 0;
    QExpansion series;
};

CorrectionSeries correction_series(std::int64_t p, std::int64_t N, unsigned threads = 1);

/// zagier_series(N) plus the correction; constant term (1-p)/2.
QExpansion completed_series(std::int64_t p, std::int64_t N, unsigned threads = 1);

/// Compare the completed series (or the raw Zagier series when uncorrected)
/// against (1-p)/2 * E_{k_l} mod p^l through q^N, with
/// k_l = 3/2 + p^(l-1)(p-1).  corrected_exponents lists where a nonzero
/// correction was applied.  Requires p >= 5 prime, l >= 1, N >= 0.
CongruenceCertificate verify_completion(std::int64_t p, int l, std::int64_t N,
                                        bool uncorrected = false, unsigned threads = 1);

/// Exponents <= N where the *uncorrected* Zagier series differs from the
/// scaled Cohen series mod p^l.  Always a subset of
/// { m : is_neg_square_mod(m, p) }.
std::vector<std::int64_t> difference_support(std::int64_t p, int l, std::int64_t N,
                                             unsigned threads = 1);

}  // namespace mockeis

#pragma once
/**
 * @file eisenstein.hpp
 * @brief Cohen Eisenstein series of half-integral weight, Hurwitz class
 *        numbers by two independent routes, Zagier's weight-3/2 Eisenstein
 *        series, and the Koblitz-style congruence between Cohen series whose
 *        weights differ by p - 1.
 *
 * For odd twice_k >= 7 and n = D0 f^2 (n = 0, 3 mod 4), the q^n coefficient
 * of the normalized Cohen series E_k (constant term 1) is
 *
 *     c_{n,k} = L(3/2 - k, chi_{-D0}) / zeta(2 - 2k)
 *               * sum_{d | f} mu(d) chi_{-D0}(d) d^(k - 3/2) sigma_{2k-2}(f/d),
 *
 * and c_n = 0 for n = 1, 2 (mod 4).  Coefficients are exact rationals.
 */

#include <cstdint>
#include <string>

#include "mockeis/certificate.hpp"
#include "mockeis/numtheory.hpp"
#include "mockeis/qseries.hpp"
#include "mockeis/rational.hpp"

namespace mockeis {

/// A half-integral weight k = twice_k / 2 with twice_k odd and positive.
struct HalfIntWeight {
    int twice_k = 0;

    /// Throws weight_out_of_range unless twice_k is odd and positive.
    explicit HalfIntWeight(int twice_k_);

    /// Parse "7/2", "15/2", ...; throws std::invalid_argument on malformed
    /// input and weight_out_of_range on even numerators.
    static HalfIntWeight parse(const std::string& text);

    /// k + s for an integer shift s (e.g. k + (p-1)).
    HalfIntWeight plus_integer(int s) const { return HalfIntWeight(twice_k + 2 * s); }

    std::string str() const { return std::to_string(twice_k) + "/2"; }

    bool operator==(const HalfIntWeight&) const = default;
};

/// q^n coefficient of E_k.  Requires twice_k >= 7 (throws weight_out_of_range
/// below that) and n >= 0.
Rational cohen_coefficient(std::int64_t n, HalfIntWeight k);

/// E_k through q^N.  Coefficients are computed in parallel over exponents;
/// the result is independent of the worker count (threads == 0 means one
/// worker per available core).
QExpansion cohen_series(HalfIntWeight k, std::int64_t N, unsigned threads = 1);

/// Hurwitz class number H(n) by weighted enumeration of reduced binary
/// quadratic forms of discriminant -n (counting every imprimitive multiple):
/// H(0) = -1/12, H(n) = 0 for n = 1, 2 (mod 4).
Rational hurwitz_forms(std::int64_t n);

/// H(n) by the closed L-value formula
///     H(n) = L(0, chi_{-D0}) * sum_{d | f} mu(d) chi_{-D0}(d) sigma_1(f/d).
Rational hurwitz_L(std::int64_t n);

/// Zagier's weight-3/2 Eisenstein series through q^N: constant term 1 and
/// q^m coefficient -12 H(m) for m >= 1.
QExpansion zagier_series(std::int64_t N, unsigned threads = 1);

/// Verify E_k == E_{k + (p-1)} coefficient-wise mod p through q^N.
/// Requires twice_k >= 7 and p an odd prime (p = 3 is allowed here).
CongruenceCertificate koblitz_congruence_check(HalfIntWeight k, std::int64_t p,
                                               std::int64_t N, unsigned threads = 1);

}  // namespace mockeis

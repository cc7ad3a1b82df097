#pragma once
/**
 * @file padic.hpp
 * @brief p-adic reduction, Teichmueller digits, Kubota-Leopoldt special
 *        values at non-positive integers, and the three congruence checks
 *        that drive the completion argument:
 *
 *   - kummer_chain_check: L_p(0, chi omega) is congruent mod p^l to the
 *     classical value at 1 - n for n = 1 + p^(l-1)(p-1),
 *   - zeta_scaling_check: -6 zeta(-1 - p^(l-1)(p-1)) == (1-p)/2 mod p^l,
 *   - proof_coefficient_congruence: the q^m Cohen coefficient at weight
 *     k = 3/2 + p^(l-1)(p-1) collapses mod p^l to
 *     (1 - chi_{-m}(p)) / zeta(2-2k) * H(m).
 *
 * The three checks require p >= 5 (p = 3 sits outside the range where the
 * scaling constants are 3-adically integral) and reject smaller p with
 * std::domain_error.
 */

#include <cstdint>

#include "mockeis/certificate.hpp"
#include "mockeis/numtheory.hpp"
#include "mockeis/rational.hpp"

namespace mockeis {

/// A residue x mod p^l, 0 <= value < p^l.
struct Residue {
    std::int64_t p = 0;
    int l = 0;
    std::int64_t pl = 0;
    std::int64_t value = 0;

    bool operator==(const Residue&) const = default;
};

/// Canonical image of x in Z/p^l (p an odd prime).  Throws
/// p_divides_denominator when x is not p-integral.
Residue reduce_rational(const Rational& x, std::int64_t p, int l);

/// Teichmueller digit omega(a) mod p^l, computed by iterating x -> x^p to
/// its fixed point.  omega(a) == a mod p, and omega(a)^(p-1) == 1 mod p^l
/// for a prime to p.
std::int64_t teichmuller(std::int64_t a, std::int64_t p, int l);

/// Kubota-Leopoldt value L_p(1-n, chi omega^n) = (1 - chi(p) p^(n-1)) L(1-n, chi)
/// for n >= 1.
Rational lp_special_value(int n, const QuadraticCharacter& chi, std::int64_t p);

/// L_p(0, chi omega) by the three-way Euler-factor table:
/// 2 L(0,chi) when chi(p) = -1;  L(0,chi) when chi(p) = 0;  0 when chi(p) = 1.
Rational lp_zero_cases(const QuadraticCharacter& chi, std::int64_t p);

/// Check lp_special_value(1) == lp_special_value(n) mod p^l at
/// n = 1 + p^(l-1)(p-1).  Requires p >= 5 prime, l >= 1.
CongruenceCertificate kummer_chain_check(const QuadraticCharacter& chi,
                                         std::int64_t p, int l);

/// Check -6 zeta(-1 - p^(l-1)(p-1)) == (1-p)/2 mod p^l.  Requires p >= 5.
CongruenceCertificate zeta_scaling_check(std::int64_t p, int l);

/// Check the single-coefficient congruence at m (m = 0, 3 mod 4, m >= 3)
/// for weight k = 3/2 + p^(l-1)(p-1).  When p divides the square part f of
/// m = D0 f^2 the two readings of chi_{-m}(p) can differ; such exponents are
/// recorded in `flagged` with both right-hand sides and do not fail the
/// certificate.  Requires p >= 5.
CongruenceCertificate proof_coefficient_congruence(std::int64_t m, std::int64_t p, int l);

}  // namespace mockeis

#pragma once
/**
 * @file qseries.hpp
 * @brief Truncated q-expansions with exact rational coefficients, and their
 *        reductions modulo prime powers.
 *
 * A QExpansion holds coefficients for exponents 0..precision inclusive;
 * zero coefficients are not stored.  All operations are value-producing
 * (inputs are never mutated).  Serialization round-trips bit-exactly.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mockeis/errors.hpp"
#include "mockeis/rational.hpp"

namespace mockeis {

struct QExpansion {
    std::int64_t precision = 0;                 ///< coefficients known for 0..precision
    std::map<std::int64_t, Rational> coeffs;    ///< nonzero coefficients, keyed by exponent

    /// Coefficient of q^n (zero when not stored).  Throws std::out_of_range
    /// for n < 0 or n > precision: such coefficients are not known.
    Rational coefficient(std::int64_t n) const;

    /// Set the coefficient of q^n; storing an exact zero erases the entry.
    void set(std::int64_t n, Rational value);

    bool operator==(const QExpansion&) const = default;
};

/// A prime-power modulus p^l (p an odd prime, l >= 1, p^l < 2^62).
struct Modulus {
    std::int64_t p = 0;
    int l = 0;
    std::int64_t pl = 0;  ///< p^l

    bool operator==(const Modulus&) const = default;
};

/// Validates and builds p^l; throws std::domain_error on a bad modulus.
Modulus make_modulus(std::int64_t p, int l);

/// A q-expansion reduced mod p^l: residues in [0, p^l), zeros not stored.
struct ResidueSeries {
    std::int64_t precision = 0;
    Modulus modulus;
    std::map<std::int64_t, std::int64_t> residues;

    std::int64_t residue(std::int64_t n) const;

    bool operator==(const ResidueSeries&) const = default;
};

// ------------------------------------------------------------- operations

/// Coefficient-wise sum; the result has precision min(a, b).
QExpansion add(const QExpansion& a, const QExpansion& b);

/// Scalar multiple c * a (precision preserved).
QExpansion scale(const Rational& c, const QExpansion& a);

/// Reduce every coefficient mod p^l.  Throws p_divides_denominator (carrying
/// the offending exponent) if some coefficient is not p-integral.
ResidueSeries reduce_mod(const QExpansion& a, std::int64_t p, int l);

/// Exponents (ascending) where a and b differ, compared over
/// 0..min(precision).  Throws modulus_mismatch when (p, l) disagree.
std::vector<std::int64_t> compare(const ResidueSeries& a, const ResidueSeries& b);

// ---------------------------------------------------------- serialization

/// {"coeffs":[[n,"num/den"],...],"precision":N} — exponents ascending,
/// values as canonical rational strings.  Bit-exact round trip.
std::string to_json(const QExpansion& a);
QExpansion qexpansion_from_json(const std::string& text);

/// {"coeffs":[[n,r],...],"modulus":{"l":l,"p":p},"precision":N} — residues
/// as plain integers.
std::string to_json(const ResidueSeries& a);
ResidueSeries residue_series_from_json(const std::string& text);

/// "exponent,value" header plus one row per stored coefficient.
std::string to_csv(const QExpansion& a);
std::string to_csv(const ResidueSeries& a);

}  // namespace mockeis

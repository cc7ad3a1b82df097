#pragma once
/**
 * @file rational.hpp
 * @brief Exact integer / rational types (GMP-backed) and string conversions.
 *
 * Every quantity in this library is exact: big integers are mpz_class and
 * rationals are mpq_class.  mpq_class keeps values canonical (lowest terms,
 * positive denominator), which is the invariant the rest of the code relies
 * on.  Serialized form is "num" or "num/den" in base 10.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mockeis {

using Integer = mpz_class;
using Rational = mpq_class;

/// "56", "-61/2", ... — canonical base-10 form, no denominator when it is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

///// Parse "num" or "num/den"; throws std::invalid_argument on malformed input
/// or a zero denominator.  Result is canonicalized.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    if (mpq_denref(q.get_mpq_t())->_mp_size == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

/// b^e for machine-sized exponents, exact.
inline Integer pow_integer(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace mockeis

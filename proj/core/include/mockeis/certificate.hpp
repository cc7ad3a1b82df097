#pragma once
/**
 * @file certificate.hpp
 * @brief Machine-checkable outcome of a coefficient-by-coefficient
 *        congruence verification.
 *
 * A certificate records the parameters of the check, the verdict, and every
 * exponent where the two sides disagreed (with both residues), so a failed
 * run is reproducible from the certificate alone.  Invariant: verdict is
 * "pass" exactly when diffs is empty.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace mockeis {

struct CongruenceCertificate {
    std::int64_t p = 0;
    int l = 1;
    std::int64_t precision = 0;  ///< N: exponents 0..N were compared
    int weight_twice_k = 0;      ///< doubled half-integral weight in play (0 if n/a)
    bool pass = false;

    struct Diff {
        std::int64_t exponent = 0;
        std::int64_t lhs = 0;  ///< residue mod p^l
        std::int64_t rhs = 0;

        bool operator==(const Diff&) const = default;
    };
    std::vector<Diff> diffs;  ///< ascending by exponent

    /// Exponents where a correction term was applied (completion checks).
    std::vector<std::int64_t> corrected_exponents;

    /// Informational dual-reading entries for exponents where p divides the
    /// square part f of m = D0 f^2.  There the two natural right-hand sides
    /// (character of the fundamental part vs literal Kronecker symbol) can
    /// disagree; both are recorded and neither affects the verdict.
    struct Flag {
        std::int64_t exponent = 0;
        std::int64_t lhs = 0;
        std::int64_t rhs_decomposition = 0;
        std::int64_t rhs_literal = 0;

        bool operator==(const Flag&) const = default;
    };
    std::vector<Flag> flagged;

    bool operator==(const CongruenceCertificate&) const = default;
};

/// {"N":...,"corrected_exponents":[...],"diffs":[[m,lhs,rhs],...],"l":...,
///  "p":...,"verdict":"pass"|"fail","weight_twice_k":...}
/// plus "flagged":[[m,lhs,rhs_decomposition,rhs_literal],...] when nonempty.
std::string to_json(const CongruenceCertificate& c);
CongruenceCertificate certificate_from_json(const std::string& text);

}  // namespace mockeis

#pragma once
/**
 * @file errors.hpp
 * @brief Error types for domain violations in exact arithmetic.
 *
 * All mathematical preconditions are enforced with exceptions:
 *   - std::invalid_argument  — malformed input (parse errors, bad ranges)
 *   - std::domain_error      — structurally valid input outside the domain
 *     of an operation (and the refinements below)
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mockeis {

/// Reduction of a rational mod p^l met a denominator divisible by p.
/// `exponent` is the q-power whose coefficient failed (-1 for bare rationals).
struct p_divides_denominator : std::domain_error {
    std::int64_t p;
    std::int64_t exponent;
    p_divides_denominator(std::int64_t p_, std::int64_t exponent_ = -1)
        : std::domain_error(exponent_ < 0
                                ? "denominator divisible by p=" + std::to_string(p_)
                                : "coefficient of q^" + std::to_string(exponent_) +
                                      " has denominator divisible by p=" + std::to_string(p_)),
          p(p_),
          exponent(exponent_) {}
};

/// Two residue series with different (p, l) cannot be compared.
struct modulus_mismatch : std::domain_error {
    modulus_mismatch(const std::string& what) : std::domain_error(what) {}
};

/// Half-integral weight outside the domain of a series (e.g. below 7/2).
struct weight_out_of_range : std::domain_error {
    weight_out_of_range(const std::string& what) : std::domain_error(what) {}
};

}  // namespace mockeis

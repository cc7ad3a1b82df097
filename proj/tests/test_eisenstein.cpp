#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mockeis/eisenstein.hpp"

using namespace mockeis;

namespace {

// Kronecker-Hurwitz relation: sum_{r^2 <= 4n} H(4n - r^2) = sum_{d|n} max(d, n/d),
// an independent global consistency check on the whole H table.
void check_kronecker_hurwitz(std::int64_t n) {
    Rational lhs = hurwitz_forms(4 * n);  // r = 0 term
    for (std::int64_t r = 1; r * r <= 4 * n; ++r)
        lhs += Rational(2) * hurwitz_forms(4 * n - r * r);
    Integer rhs = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) rhs += std::max(d, n / d);
    CHECK(lhs == Rational(rhs));
}

}  // namespace

// ---- weights ---------------------------------------------------------------

TEST_CASE("half-integral weights parse and validate") {
    CHECK(HalfIntWeight::parse("7/2").twice_k == 7);
    CHECK(HalfIntWeight::parse("15/2").twice_k == 15);
    CHECK(HalfIntWeight(7).str() == "7/2");
    CHECK(HalfIntWeight(7).plus_integer(6) == HalfIntWeight(19));
    CHECK_THROWS_AS(HalfIntWeight(4), weight_out_of_range);
    CHECK_THROWS_AS(HalfIntWeight(0), weight_out_of_range);
    CHECK_THROWS_AS(HalfIntWeight(-3), weight_out_of_range);
    CHECK_THROWS_AS(HalfIntWeight::parse("4/2"), weight_out_of_range);
    CHECK_THROWS_AS(HalfIntWeight::parse("-7/2"), weight_out_of_range);
    CHECK_THROWS_AS(HalfIntWeight::parse("7/4"), std::invalid_argument);
    CHECK_THROWS_AS(HalfIntWeight::parse("7"), std::invalid_argument);
    CHECK_THROWS_AS(HalfIntWeight::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(HalfIntWeight::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(HalfIntWeight::parse("7/2 "), std::invalid_argument);
}

// ---- golden coefficients ----------------------------------------------------

TEST_CASE("the three smallest series match their pinned coefficients") {
    struct Golden {
        int twice_k;
        std::vector<std::int64_t> at_3_4_7_8_11_12;
    };
    const std::vector<Golden> golden{
        {7, {56, 126, 576, 756, 1512, 2072}},
        {11, {-88, -330, -4224, -7524, -30600, -46552}},
        {15, {56, 366, 14016, 33156, 260712, 462392}},
    };
    const std::vector<std::int64_t> exponents{3, 4, 7, 8, 11, 12};
    for (const auto& g : golden) {
        const QExpansion E = cohen_series(HalfIntWeight(g.twice_k), 12);
        CHECK(E.coefficient(0) == 1);
        for (std::int64_t n : {1, 2, 5, 6, 9, 10}) CHECK(E.coefficient(n) == 0);
        for (std::size_t i = 0; i < exponents.size(); ++i)
            CHECK(E.coefficient(exponents[i]) == Rational(g.at_3_4_7_8_11_12[i]));
    }
}

TEST_CASE("cohen_coefficient validates its domain") {
    CHECK_THROWS_AS(cohen_coefficient(3, HalfIntWeight(3)), weight_out_of_range);
    CHECK_THROWS_AS(cohen_coefficient(3, HalfIntWeight(5)), weight_out_of_range);
    CHECK_THROWS_AS(cohen_coefficient(-1, HalfIntWeight(7)), std::domain_error);
    CHECK(cohen_coefficient(0, HalfIntWeight(7)) == 1);
    CHECK(cohen_coefficient(1, HalfIntWeight(7)) == 0);
    CHECK(cohen_coefficient(2, HalfIntWeight(7)) == 0);
    CHECK_THROWS_AS(cohen_series(HalfIntWeight(7), -1), std::domain_error);
}

TEST_CASE("coefficients multiply out over square parts") {
    // n = 75 = 3 * 5^2 exercises the f-sum: with L(-2,chi_{-3})/zeta(-5) = 56,
    // the divisor sum is sigma_5(5) + mu(5) chi_{-3}(5) 5^2 sigma_5(1)
    // = 3126 + 25, hence c = 56 * 3151 = 176456.
    CHECK(cohen_coefficient(75, HalfIntWeight(7)) == 176456);
}

// ---- Hurwitz class numbers ---------------------------------------------------

TEST_CASE("hurwitz_forms reproduces the classical table") {
    CHECK(hurwitz_forms(0) == make_rational(-1, 12));
    CHECK(hurwitz_forms(1) == 0);
    CHECK(hurwitz_forms(2) == 0);
    CHECK(hurwitz_forms(3) == make_rational(1, 3));
    CHECK(hurwitz_forms(4) == make_rational(1, 2));
    CHECK(hurwitz_forms(7) == 1);
    CHECK(hurwitz_forms(8) == 1);
    CHECK(hurwitz_forms(11) == 1);
    CHECK(hurwitz_forms(12) == make_rational(4, 3));
    CHECK(hurwitz_forms(15) == 2);
    CHECK(hurwitz_forms(16) == make_rational(3, 2));
    CHECK(hurwitz_forms(19) == 1);
    CHECK(hurwitz_forms(20) == 2);
    CHECK(hurwitz_forms(23) == 3);
    CHECK(hurwitz_forms(75) == make_rational(7, 3));
    CHECK_THROWS_AS(hurwitz_forms(-1), std::domain_error);
    CHECK_THROWS_AS(hurwitz_L(-1), std::domain_error);
}

TEST_CASE("the two Hurwitz routes agree") {
    for (std::int64_t n = 0; n <= 600; ++n) CHECK(hurwitz_forms(n) == hurwitz_L(n));
}

TEST_CASE("Kronecker-Hurwitz relation holds") {
    for (std::int64_t n = 1; n <= 60; ++n) check_kronecker_hurwitz(n);
}

// ---- weight 3/2 ---------------------------------------------------------------

TEST_CASE("zagier_series matches its displayed expansion") {
    const QExpansion Z = zagier_series(12);
    CHECK(Z.precision == 12);
    CHECK(Z.coefficient(0) == 1);
    CHECK(Z.coefficient(3) == -4);
    CHECK(Z.coefficient(4) == -6);
    CHECK(Z.coefficient(7) == -12);
    CHECK(Z.coefficient(8) == -12);
    CHECK(Z.coefficient(11) == -12);
    CHECK(Z.coefficient(12) == -16);
    for (std::int64_t n : {1, 2, 5, 6, 9, 10}) CHECK(Z.coefficient(n) == 0);
    CHECK_THROWS_AS(Z.coefficient(13), std::out_of_range);
}

// ---- congruences across the weight step ----------------------------------------

TEST_CASE("E_k == E_{k+p-1} mod p on an initial segment") {
    for (std::int64_t p : {3, 5, 7}) {
        const CongruenceCertificate cert = koblitz_congruence_check(HalfIntWeight(7), p, 60);
        CHECK(cert.pass);
        CHECK(cert.diffs.empty());
        CHECK(cert.p == p);
        CHECK(cert.l == 1);
        CHECK(cert.weight_twice_k == 7);
        CHECK(cert.precision == 60);
    }
    CHECK(koblitz_congruence_check(HalfIntWeight(11), 5, 40).pass);
    CHECK_THROWS_AS(koblitz_congruence_check(HalfIntWeight(3), 5, 10), weight_out_of_range);
    CHECK_THROWS_AS(koblitz_congruence_check(HalfIntWeight(7), 4, 10), std::domain_error);
    CHECK_THROWS_AS(koblitz_congruence_check(HalfIntWeight(7), 5, -1), std::domain_error);
}

TEST_CASE("series are identical regardless of worker count") {
    const QExpansion a = cohen_series(HalfIntWeight(7), 40, 1);
    const QExpansion b = cohen_series(HalfIntWeight(7), 40, 4);
    CHECK(a == b);
    CHECK(to_json(a) == to_json(b));
    CHECK(zagier_series(40, 1) == zagier_series(40, 3));
}

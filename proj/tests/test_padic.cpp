#include <doctest.h>

#include <cstdint>
#include <map>
#include <stdexcept>

#include "mockeis/eisenstein.hpp"
#include "mockeis/padic.hpp"

using namespace mockeis;

// ---- reduction and Teichmueller digits ----------------------------------------

TEST_CASE("reduce_rational produces canonical residues") {
    CHECK(reduce_rational(make_rational(1, 3), 7, 2).value == 33);
    CHECK(reduce_rational(make_rational(-61, 2), 7, 1).value == 1);
    CHECK(reduce_rational(Rational(0), 5, 3).value == 0);
    CHECK(reduce_rational(Rational(-1), 5, 2).value == 24);
    const Residue r = reduce_rational(make_rational(22, 7), 5, 2);
    CHECK(r.p == 5);
    CHECK(r.l == 2);
    CHECK(r.pl == 25);
    // 7^{-1} mod 25 = 18; 22*18 = 396 = 15*25 + 21
    CHECK(r.value == 21);
    CHECK_THROWS_AS(reduce_rational(make_rational(1, 7), 7, 1), p_divides_denominator);
    CHECK_THROWS_AS(reduce_rational(make_rational(1, 3), 4, 1), std::domain_error);
}

TEST_CASE("ring structure survives reduction") {
    const auto red = [](const Rational& x) { return reduce_rational(x, 11, 2).value; };
    const Rational x = make_rational(7, 3), y = make_rational(-5, 4);
    CHECK(red(x + y) == (red(x) + red(y)) % 121);
    CHECK(red(x * y) == (red(x) * red(y)) % 121);
}

TEST_CASE("teichmuller digits are (p-1)-st roots of unity lifting a mod p") {
    CHECK(teichmuller(2, 7, 2) == 30);
    CHECK(teichmuller(1, 7, 3) == 1);
    CHECK(teichmuller(7, 7, 2) == 0);
    CHECK(teichmuller(14, 7, 3) == 0);
    for (std::int64_t p : {5, 7, 11}) {
        for (int l = 1; l <= 3; ++l) {
            std::int64_t pl = 1;
            for (int i = 0; i < l; ++i) pl *= p;
            for (std::int64_t a = 1; a < p; ++a) {
                const std::int64_t w = teichmuller(a, p, l);
                CHECK(w % p == a % p);
                // w^(p-1) == 1 mod p^l
                Integer pw;
                const Integer base(w), mod(pl);
                mpz_powm_ui(pw.get_mpz_t(), base.get_mpz_t(),
                            static_cast<unsigned long>(p - 1), mod.get_mpz_t());
                CHECK(pw == 1);
                // periodicity in a
                CHECK(teichmuller(a + p * p * p, p, l) == w);
            }
        }
    }
}

// ---- interpolation special values ----------------------------------------------

TEST_CASE("lp zero cases follow the Euler-factor table") {
    CHECK(lp_zero_cases(QuadraticCharacter(4), 7) == 1);
    CHECK(lp_zero_cases(QuadraticCharacter(3), 7) == 0);
    CHECK(lp_zero_cases(QuadraticCharacter(7), 7) == 1);
    for (std::int64_t D0 = 3; D0 <= 40; ++D0) {
        if (!is_fundamental(D0)) continue;
        const QuadraticCharacter chi(D0);
        for (std::int64_t p : {5, 7, 11})
            CHECK(lp_zero_cases(chi, p) == lp_special_value(1, chi, p));
    }
    CHECK_THROWS_AS(lp_special_value(0, QuadraticCharacter(3), 7), std::domain_error);
    CHECK_THROWS_AS(lp_special_value(1, QuadraticCharacter(3), 4), std::domain_error);
}

TEST_CASE("lp_special_value applies the Euler factor exactly") {
    const QuadraticCharacter chi3(3);
    // chi_{-3}(7) = 1: L_p(1-7) = (1 - 7^6) L(-6, chi_{-3}) = (1 - 117649)(-14/3)
    CHECK(lp_special_value(7, chi3, 7) == Rational(-14) * Rational(1 - 117649) / 3);
    // chi_{-3}(5) = -1: factor 1 + 5^(n-1)
    CHECK(lp_special_value(3, chi3, 5) ==
          Rational(26) * dirichlet_L_nonpositive(-2, chi3));
    // p | conductor: no factor at all
    CHECK(lp_special_value(4, QuadraticCharacter(7), 7) ==
          dirichlet_L_nonpositive(-3, QuadraticCharacter(7)));
}

// ---- the three proof-step checks -------------------------------------------------

TEST_CASE("kummer chain holds at pinned parameters") {
    CHECK(kummer_chain_check(QuadraticCharacter(3), 7, 1).pass);
    CHECK(kummer_chain_check(QuadraticCharacter(4), 7, 1).pass);
    CHECK(kummer_chain_check(QuadraticCharacter(7), 7, 1).pass);   // p | D0
    CHECK(kummer_chain_check(QuadraticCharacter(20), 5, 2).pass);  // p | D0, l = 2
    for (std::int64_t D0 = 3; D0 <= 40; ++D0) {
        if (!is_fundamental(D0)) continue;
        const QuadraticCharacter chi(D0);
        for (std::int64_t p : {5, 7}) CHECK(kummer_chain_check(chi, p, 1).pass);
    }
    CHECK_THROWS_AS(kummer_chain_check(QuadraticCharacter(3), 3, 1), std::domain_error);
    CHECK_THROWS_AS(kummer_chain_check(QuadraticCharacter(3), 7, 0), std::domain_error);
}

TEST_CASE("zeta scaling lands on (1-p)/2") {
    const std::map<std::pair<std::int64_t, int>, std::int64_t> frozen{
        {{5, 1}, 3},  {{5, 2}, 23},  {{7, 1}, 4},  {{7, 2}, 46},
        {{11, 1}, 6}, {{11, 2}, 116}, {{13, 1}, 7}, {{13, 2}, 163},
    };
    for (const auto& [key, residue] : frozen) {
        const auto [p, l] = key;
        const CongruenceCertificate cert = zeta_scaling_check(p, l);
        CHECK(cert.pass);
        CHECK(reduce_rational(Rational(Integer(1 - p), Integer(2)), p, l).value == residue);
    }
    // the exact values behind the first two rows
    CHECK(Rational(-6) * zeta_nonpositive(-5) == make_rational(1, 42));
    CHECK(Rational(-6) * zeta_nonpositive(-7) == make_rational(-1, 40));
    CHECK_THROWS_AS(zeta_scaling_check(3, 1), std::domain_error);
    CHECK_THROWS_AS(zeta_scaling_check(6, 1), std::domain_error);
}

TEST_CASE("single-coefficient congruence at the proof weight") {
    for (std::int64_t m : {3, 4, 7, 8, 11, 12, 15, 16, 19, 20}) {
        const CongruenceCertificate cert = proof_coefficient_congruence(m, 7, 1);
        CHECK(cert.pass);
        CHECK(cert.flagged.empty());
        CHECK(cert.weight_twice_k == 15);
    }
    // worked instances: c_{3,15/2} = 56 == 0, c_{4,15/2} = 366 == 2 (mod 7)
    CHECK(reduce_rational(cohen_coefficient(3, HalfIntWeight(15)), 7, 1).value == 0);
    CHECK(reduce_rational(cohen_coefficient(4, HalfIntWeight(15)), 7, 1).value == 2);
    CHECK(reduce_rational(cohen_coefficient(7, HalfIntWeight(15)), 7, 1).value == 2);

    CHECK_THROWS_AS(proof_coefficient_congruence(5, 7, 1), std::domain_error);
    CHECK_THROWS_AS(proof_coefficient_congruence(3, 3, 1), std::domain_error);
}

TEST_CASE("p dividing the square part is flagged, not failed") {
    // m = 75 = 3 * 5^2 at p = 5: the literal symbol (-75|5) = 0 differs from
    // chi_{-3}(5) = -1; the certificate records both readings.
    const CongruenceCertificate c75 = proof_coefficient_congruence(75, 5, 1);
    CHECK(c75.pass);
    CHECK(c75.diffs.empty());
    REQUIRE(c75.flagged.size() == 1);
    CHECK(c75.flagged[0].exponent == 75);
    CHECK(c75.flagged[0].lhs == 2);
    CHECK(c75.flagged[0].rhs_decomposition == 4);
    CHECK(c75.flagged[0].rhs_literal == 2);

    // m = 147 = 3 * 7^2 at p = 7, l = 2: here the other reading wins.
    const CongruenceCertificate c147 = proof_coefficient_congruence(147, 7, 2);
    CHECK(c147.pass);
    REQUIRE(c147.flagged.size() == 1);
    CHECK(c147.flagged[0].lhs == 0);
    CHECK(c147.flagged[0].rhs_decomposition == 0);
    CHECK(c147.flagged[0].rhs_literal == 21);
}

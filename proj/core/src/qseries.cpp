#include "mockeis/qseries.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "mockeis/numtheory.hpp"

namespace mockeis {

using nlohmann::json;

// ---------------------------------------------------------------- QExpansion

Rational QExpansion::coefficient(std::int64_t n) const {
    if (n < 0 || n > precision)
        throw std::out_of_range("QExpansion::coefficient: exponent " + std::to_string(n) +
                                " outside known range 0.." + std::to_string(precision));
    auto it = coeffs.find(n);
    return it == coeffs.end() ? Rational(0) : it->second;
}

void QExpansion::set(std::int64_t n, Rational value) {
    if (n < 0 || n > precision)
        throw std::out_of_range("QExpansion::set: exponent " + std::to_string(n) +
                                " outside known range 0.." + std::to_string(precision));
    if (value == 0)
        coeffs.erase(n);
    else
        coeffs[n] = std::move(value);
}

std::int64_t ResidueSeries::residue(std::int64_t n) const {
    if (n < 0 || n > precision)
        throw std::out_of_range("ResidueSeries::residue: exponent " + std::to_string(n) +
                                " outside known range 0.." + std::to_string(precision));
    auto it = residues.find(n);
    return it == residues.end() ? 0 : it->second;
}

Modulus make_modulus(std::int64_t p, int l) {
    if (p < 3 || !is_prime(p) || p % 2 == 0)
        throw std::domain_error("make_modulus: p must be an odd prime, got " + std::to_string(p));
    if (l < 1) throw std::domain_error("make_modulus: l must be >= 1");
    std::int64_t pl = 1;
    constexpr std::int64_t kLimit = std::int64_t(1) << 62;
    for (int i = 0; i < l; ++i) {
        if (pl > kLimit / p) throw std::domain_error("make_modulus: p^l exceeds 2^62");
        pl *= p;
    }
    return Modulus{p, l, pl};
}

// ------------------------------------------------------------- operations

QExpansion add(const QExpansion& a, const QExpansion& b) {
    QExpansion out;
    out.precision = std::min(a.precision, b.precision);
    for (const auto& [n, c] : a.coeffs) {
        if (n > out.precision) break;
        out.coeffs.emplace(n, c);
    }
    for (const auto& [n, c] : b.coeffs) {
        if (n > out.precision) break;
        auto [it, inserted] = out.coeffs.emplace(n, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.coeffs.erase(it);
        }
    }
    return out;
}

QExpansion scale(const Rational& c, const QExpansion& a) {
    QExpansion out;
    out.precision = a.precision;
    if (c == 0) return out;
    for (const auto& [n, v] : a.coeffs) out.coeffs.emplace(n, c * v);
    return out;
}

ResidueSeries reduce_mod(const QExpansion& a, std::int64_t p, int l) {
    ResidueSeries out;
    out.precision = a.precision;
    out.modulus = make_modulus(p, l);
    const Integer pl(out.modulus.pl);
    Integer inv, r;
    for (const auto& [n, c] : a.coeffs) {
        // r = num * den^{-1} mod p^l; fails iff p | den
        if (mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(), pl.get_mpz_t()) == 0)
            throw p_divides_denominator(p, n);
        r = c.get_num() * inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pl.get_mpz_t());
        if (r != 0) out.residues.emplace(n, r.get_si());
    }
    return out;
}

std::vector<std::int64_t> compare(const ResidueSeries& a, const ResidueSeries& b) {
    if (!(a.modulus == b.modulus)) {
        std::ostringstream os;
        os << "compare: modulus mismatch " << a.modulus.p << "^" << a.modulus.l << " vs "
           << b.modulus.p << "^" << b.modulus.l;
        throw modulus_mismatch(os.str());
    }
    const std::int64_t limit = std::min(a.precision, b.precision);
    std::vector<std::int64_t> out;
    auto ia = a.residues.begin(), ib = b.residues.begin();
    while (ia != a.residues.end() || ib != b.residues.end()) {
        std::int64_t na = ia == a.residues.end() ? limit + 1 : ia->first;
        std::int64_t nb = ib == b.residues.end() ? limit + 1 : ib->first;
        std::int64_t n = std::min(na, nb);
        if (n > limit) break;
        std::int64_t va = 0, vb = 0;
        if (na == n) va = (ia++)->second;
        if (nb == n) vb = (ib++)->second;
        if (va != vb) out.push_back(n);
    }
    return out;
}

// ---------------------------------------------------------- serialization

std::string to_json(const QExpansion& a) {
    json coeffs = json::array();
    for (const auto& [n, c] : a.coeffs) coeffs.push_back(json::array({n, to_string(c)}));
    return json{{"coeffs", std::move(coeffs)}, {"precision", a.precision}}.dump();
}

QExpansion qexpansion_from_json(const std::string& text) {
    json j = json::parse(text);
    QExpansion out;
    out.precision = j.at("precision").get<std::int64_t>();
    if (out.precision < 0) throw std::invalid_argument("qexpansion_from_json: negative precision");
    for (const auto& entry : j.at("coeffs")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("qexpansion_from_json: coefficient entries must be pairs");
        std::int64_t n = entry[0].get<std::int64_t>();
        Rational c = parse_rational(entry[1].get<std::string>());
        if (n < 0 || n > out.precision)
            throw std::invalid_argument("qexpansion_from_json: exponent out of range");
        if (c != 0) out.coeffs[n] = std::move(c);
    }
    return out;
}

std::string to_json(const ResidueSeries& a) {
    json coeffs = json::array();
    for (const auto& [n, r] : a.residues) coeffs.push_back(json::array({n, r}));
    return json{{"coeffs", std::move(coeffs)},
                {"modulus", json{{"l", a.modulus.l}, {"p", a.modulus.p}}},
                {"precision", a.precision}}
        .dump();
}

ResidueSeries residue_series_from_json(const std::string& text) {
    json j = json::parse(text);
    ResidueSeries out;
    out.precision = j.at("precision").get<std::int64_t>();
    if (out.precision < 0) throw std::invalid_argument("residue_series_from_json: negative precision");
    const auto& mod = j.at("modulus");
    out.modulus = make_modulus(mod.at("p").get<std::int64_t>(), mod.at("l").get<int>());
    for (const auto& entry : j.at("coeffs")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("residue_series_from_json: entries must be pairs");
        std::int64_t n = entry[0].get<std::int64_t>();
        std::int64_t r = entry[1].get<std::int64_t>();
        if (n < 0 || n > out.precision)
            throw std::invalid_argument("residue_series_from_json: exponent out of range");
        if (r < 0 || r >= out.modulus.pl)
            throw std::invalid_argument("residue_series_from_json: residue out of range");
        if (r != 0) out.residues[n] = r;
    }
    return out;
}

std::string to_csv(const QExpansion& a) {
    std::ostringstream os;
    os << "exponent,value\n";
    for (const auto& [n, c] : a.coeffs) os << n << "," << to_string(c) << "\n";
    return os.str();
}

std::string to_csv(const ResidueSeries& a) {
    std::ostringstream os;
    os << "exponent,value\n";
    for (const auto& [n, r] : a.residues) os << n << "," << r << "\n";
    return os.str();
}

}  // namespace mockeis

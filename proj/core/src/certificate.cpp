#include "mockeis/certificate.hpp"

#include <json.hpp>

#include <stdexcept>

namespace mockeis {

using nlohmann::json;

std::string to_json(const CongruenceCertificate& c) {
    json diffs = json::array();
    for (const auto& d : c.diffs) diffs.push_back(json::array({d.exponent, d.lhs, d.rhs}));
    json j{{"N", c.precision},
           {"corrected_exponents", c.corrected_exponents},
           {"diffs", std::move(diffs)},
           {"l", c.l},
           {"p", c.p},
           {"verdict", c.pass ? "pass" : "fail"},
           {"weight_twice_k", c.weight_twice_k}};
    if (!c.flagged.empty()) {
        json flags = json::array();
        for (const auto& f : c.flagged)
            flags.push_back(json::array({f.exponent, f.lhs, f.rhs_decomposition, f.rhs_literal}));
        j["flagged"] = std::move(flags);
    }
    return j.dump();
}

CongruenceCertificate certificate_from_json(const std::string& text) {
    json j = json::parse(text);
    CongruenceCertificate c;
    c.precision = j.at("N").get<std::int64_t>();
    c.l = j.at("l").get<int>();
    c.p = j.at("p").get<std::int64_t>();
    c.weight_twice_k = j.at("weight_twice_k").get<int>();
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail")
        throw std::invalid_argument("certificate_from_json: bad verdict '" + verdict + "'");
    c.pass = verdict == "pass";
    c.corrected_exponents = j.at("corrected_exponents").get<std::vector<std::int64_t>>();
    for (const auto& entry : j.at("diffs")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("certificate_from_json: diff entries must be triples");
        c.diffs.push_back({entry[0].get<std::int64_t>(), entry[1].get<std::int64_t>(),
                           entry[2].get<std::int64_t>()});
    }
    if (j.contains("flagged")) {
        for (const auto& entry : j.at("flagged")) {
            if (!entry.is_array() || entry.size() != 4)
                throw std::invalid_argument("certificate_from_json: flag entries must be quadruples");
            c.flagged.push_back({entry[0].get<std::int64_t>(), entry[1].get<std::int64_t>(),
                                 entry[2].get<std::int64_t>(), entry[3].get<std::int64_t>()});
        }
    }
    if (c.pass != c.diffs.empty())
        throw std::invalid_argument("certificate_from_json: verdict inconsistent with diffs");
    return c;
}

}  // namespace mockeis

#ifndef WEYLSECT_JSON_IO_HPP
#define WEYLSECT_JSON_IO_HPP

#include "kottwitz.hpp"
#include "tables.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace weylsect {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct CaseSpec {
    char type = 'A';
    int rank = 1;
    IsogenyTag iso;
    long long modulus = 24;

    std::string type_str() const { return std::string(1, type) + std::to_string(rank); }
};

inline json case_json(const CaseSpec& c) {
    return json{{"type", std::string(1, c.type)},
                {"rank", c.rank},
                {"isogeny", c.iso.str()},
                {"modulus", c.modulus}};
}

inline IsogenyTag parse_isogeny(const std::string& s) {
    if (s == "sc" || s == "simply-connected" || s == "simply_connected")
        return IsogenyTag::sc();
    if (s == "adjoint" || s == "ad")
        return IsogenyTag::adjoint();
    if (s.rfind("middle:", 0) == 0)
        return IsogenyTag::middle(std::stoi(s.substr(7)));
    if (s.rfind("coweight:", 0) == 0)
        return IsogenyTag::coweight(std::stoi(s.substr(9)));
    throw error("unknown isogeny '" + s + "' (expected sc, adjoint, middle:a, coweight:i)");
}

inline CaseSpec parse_case(const json& j) {
    CaseSpec c;
    std::string t = j.at("type").get<std::string>();
    require(t.size() == 1, "case type must be a single letter");
    c.type = t[0];
    c.rank = j.at("rank").get<int>();
    c.iso = parse_isogeny(j.at("isogeny").get<std::string>());
    c.modulus = j.at("modulus").get<long long>();
    return c;
}

// --- torus coordinates -----------------------------------------------------

inline json monomial_json(const MonomialGroup& g, const Monomial& m) {
    json e = json::object();
    for (size_t k = 0; k < m.e.size(); ++k)
        if (m.e[k] != 0)
            e[g.params[k]] = m.e[k];
    return json{{"zeta", m.zeta}, {"exp", e}};
}

inline json torus_json(const TorusElement& t) {
    json coords = json::array();
    for (int i = 0; i < t.rank(); ++i)
        coords.push_back(monomial_json(t.group(), t.coord(i)));
    return coords;
}

// --- section family ----------------------------------------------------------

struct FamilyDoc {
    CaseSpec spec;
    std::vector<std::string> free_params;
    std::vector<std::pair<std::string, long long>> torsion;
    long long minimal_modulus = 2;
    // values[i][l] = (zeta, {param -> exponent})
    std::vector<std::vector<std::pair<long long, std::vector<std::pair<std::string, long long>>>>> values;

    friend bool operator==(const FamilyDoc&, const FamilyDoc&) = default;
};

inline FamilyDoc family_doc(const CaseSpec& spec, const SectionFamily& fam) {
    FamilyDoc d;
    d.spec = spec;
    d.free_params = fam.free_names();
    d.torsion = fam.torsion_params();
    d.minimal_modulus = fam.minimal_modulus;
    for (const auto& v : fam.values) {
        std::vector<std::pair<long long, std::vector<std::pair<std::string, long long>>>> coords;
        for (int l = 0; l < v.rank(); ++l) {
            const Monomial& m = v.coord(l);
            std::vector<std::pair<std::string, long long>> exps;
            for (size_t k = 0; k < m.e.size(); ++k)
                if (m.e[k] != 0)
                    exps.emplace_back(v.group().params[k], m.e[k]);
            coords.emplace_back(m.zeta, std::move(exps));
        }
        d.values.push_back(std::move(coords));
    }
    return d;
}

inline json family_json(const FamilyDoc& d) {
    json torsion = json::array();
    for (const auto& [nm, ord] : d.torsion)
        torsion.push_back(json{{"name", nm}, {"order", ord}});
    json values = json::array();
    for (size_t i = 0; i < d.values.size(); ++i) {
        json coords = json::array();
        for (const auto& [zeta, exps] : d.values[i]) {
            json e = json::object();
            for (const auto& [nm, x] : exps)
                e[nm] = x;
            coords.push_back(json{{"zeta", zeta}, {"exp", e}});
        }
        values.push_back(json{{"t", i + 1}, {"coords", coords}});
    }
    return json{{"schema", kSchemaVersion},
                {"case", case_json(d.spec)},
                {"family",
                 json{{"free", d.free_params},
                      {"torsion", torsion},
                      {"minimal_modulus", d.minimal_modulus},
                      {"values", values}}}};
}

inline FamilyDoc family_from_json(const json& j) {
    require(j.at("schema").get<int>() == kSchemaVersion, "unknown schema version");
    FamilyDoc d;
    d.spec = parse_case(j.at("case"));
    const json& f = j.at("family");
    d.free_params = f.at("free").get<std::vector<std::string>>();
    for (const auto& t : f.at("torsion"))
        d.torsion.emplace_back(t.at("name").get<std::string>(),
                               t.at("order").get<long long>());
    d.minimal_modulus = f.at("minimal_modulus").get<long long>();
    for (const auto& v : f.at("values")) {
        std::vector<std::pair<long long, std::vector<std::pair<std::string, long long>>>> coords;
        for (const auto& c : v.at("coords")) {
            std::vector<std::pair<std::string, long long>> exps;
            for (const auto& [k, val] : c.at("exp").items())
                exps.emplace_back(k, val.get<long long>());
            coords.emplace_back(c.at("zeta").get<long long>(), std::move(exps));
        }
        d.values.push_back(std::move(coords));
    }
    return d;
}

// --- profiles ---------------------------------------------------------------

struct ProfilesDoc {
    CaseSpec spec;
    std::vector<std::vector<long long>> profiles; // 0 = infinite
    std::vector<std::pair<int, int>> hasse;
    std::vector<long long> optimal;

    friend bool operator==(const ProfilesDoc&, const ProfilesDoc&) = default;
};

inline json orders_json(const std::vector<long long>& orders) {
    json a = json::array();
    for (long long o : orders) {
        if (o == 0)
            a.push_back("inf");
        else
            a.push_back(o);
    }
    return a;
}

inline std::vector<long long> orders_from_json(const json& a) {
    std::vector<long long> r;
    for (const auto& x : a)
        r.push_back(x.is_string() ? 0 : x.get<long long>());
    return r;
}

inline json profiles_json(const ProfilesDoc& d) {
    json ps = json::array();
    for (const auto& p : d.profiles)
        ps.push_back(orders_json(p));
    json hs = json::array();
    for (const auto& [a, b] : d.hasse)
        hs.push_back(json::array({a, b}));
    return json{{"schema", kSchemaVersion},
                {"case", case_json(d.spec)},
                {"profiles", ps},
                {"hasse", hs},
                {"optimal", orders_json(d.optimal)}};
}

inline ProfilesDoc profiles_from_json(const json& j) {
    require(j.at("schema").get<int>() == kSchemaVersion, "unknown schema version");
    ProfilesDoc d;
    d.spec = parse_case(j.at("case"));
    for (const auto& p : j.at("profiles"))
        d.profiles.push_back(orders_from_json(p));
    for (const auto& e : j.at("hasse"))
        d.hasse.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    d.optimal = orders_from_json(j.at("optimal"));
    return d;
}

// --- lift check ---------------------------------------------------------------

struct LiftDoc {
    CaseSpec spec;
    std::string section;
    std::vector<int> element;
    long long r_max = 0;
    std::vector<bool> ok;
    std::vector<std::string> discrepancy;
    bool all_ok = true;

    friend bool operator==(const LiftDoc&, const LiftDoc&) = default;
};

inline json lift_json(const LiftDoc& d) {
    json per_r = json::array();
    for (size_t r = 0; r < d.ok.size(); ++r) {
        json e{{"r", r + 1}, {"ok", static_cast<bool>(d.ok[r])}};
        if (!d.ok[r])
            e["discrepancy"] = d.discrepancy[r];
        per_r.push_back(e);
    }
    return json{{"schema", kSchemaVersion}, {"case", case_json(d.spec)},
                {"section", d.section},      {"element", d.element},
                {"r_max", d.r_max},          {"results", per_r},
                {"all_ok", d.all_ok}};
}

inline LiftDoc lift_from_json(const json& j) {
    require(j.at("schema").get<int>() == kSchemaVersion, "unknown schema version");
    LiftDoc d;
    d.spec = parse_case(j.at("case"));
    d.section = j.at("section").get<std::string>();
    d.element = j.at("element").get<std::vector<int>>();
    d.r_max = j.at("r_max").get<long long>();
    for (const auto& e : j.at("results")) {
        d.ok.push_back(e.at("ok").get<bool>());
        d.discrepancy.push_back(e.contains("discrepancy")
                                    ? e.at("discrepancy").get<std::string>()
                                    : std::string());
    }
    d.all_ok = j.at("all_ok").get<bool>();
    return d;
}

} // namespace weylsect

#endif

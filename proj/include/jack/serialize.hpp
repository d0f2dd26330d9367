#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "jack/lr.hpp"

namespace jack {

using json = nlohmann::json;

// Coefficients serialize as a pair of integer polynomials (ascending degree,
// decimal strings so arbitrary precision survives JSON).  The pair is made
// canonical: common content removed, denominator primitive with positive
// leading coefficient.
inline json poly_pair_json(const Poly& num, const Poly& den) {
    Int lcm = 1;
    for (const auto& c : num.coeffs()) lcm = lcm / gcd(lcm, Int(c.get_den())) * Int(c.get_den());
    for (const auto& c : den.coeffs()) lcm = lcm / gcd(lcm, Int(c.get_den())) * Int(c.get_den());
    std::vector<Int> n, d;
    for (const auto& c : num.coeffs()) {
        Rat v = c * Rat(lcm);
        n.push_back(v.get_num());
    }
    for (const auto& c : den.coeffs()) {
        Rat v = c * Rat(lcm);
        d.push_back(v.get_num());
    }
    Int content = 0;
    for (const auto& x : n) content = gcd(content, x);
    for (const auto& x : d) content = gcd(content, x);
    if (content == 0) content = 1;
    if (!d.empty() && d.back() < 0) content = -content;
    json jn = json::array(), jd = json::array();
    for (const auto& x : n) jn.push_back(Int(x / content).get_str());
    for (const auto& x : d) jd.push_back(Int(x / content).get_str());
    return json{{"num", jn}, {"den", jd}};
}

inline json to_json(const RatFunc& f) { return poly_pair_json(f.num(), f.den()); }

inline Poly poly_from_strings(const json& arr) {
    std::vector<Rat> c;
    for (const auto& s : arr) c.push_back(Rat(s.get<std::string>()));
    return Poly(std::move(c));
}

inline RatFunc ratfunc_from_json(const json& j) {
    return RatFunc(poly_from_strings(j.at("num")), poly_from_strings(j.at("den")));
}

inline json to_json(const Partition& la) {
    json arr = json::array();
    for (int x : la.parts()) arr.push_back(x);
    return arr;
}

inline Partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

inline json symfun_to_json(const SymFun& f, const std::string& basis = "p") {
    json terms = json::array();
    for (const auto& [la, c] : f.terms())
        terms.push_back(json{{"partition", to_json(la)}, {"coeff", to_json(c)}});
    return json{{"basis", basis}, {"terms", terms}};
}

inline json coeff_map_to_json(const std::map<Partition, RatFunc>& m, const std::string& basis) {
    json terms = json::array();
    for (const auto& [la, c] : m)
        terms.push_back(json{{"partition", to_json(la)}, {"coeff", to_json(c)}});
    return json{{"basis", basis}, {"terms", terms}};
}

inline SymFun symfun_from_json(const json& j) {
    std::map<Partition, RatFunc> t;
    for (const auto& term : j.at("terms"))
        t.emplace(partition_from_json(term.at("partition")), ratfunc_from_json(term.at("coeff")));
    return SymFun(std::move(t));
}

inline json to_json(const LRReport& r) {
    json j{{"mu", to_json(r.mu)},
           {"nu", to_json(r.nu)},
           {"lambda", to_json(r.lambda)},
           {"value", to_json(r.value)},
           {"is_polynomial", r.is_polynomial},
           {"is_nonneg_int", r.is_nonneg_int},
           {"route", r.route}};
    j["corner_removal"] = r.corner_removal ? to_json(*r.corner_removal) : json(nullptr);
    return j;
}

inline LRReport lr_report_from_json(const json& j) {
    LRReport r;
    r.mu = partition_from_json(j.at("mu"));
    r.nu = partition_from_json(j.at("nu"));
    r.lambda = partition_from_json(j.at("lambda"));
    r.value = ratfunc_from_json(j.at("value"));
    r.is_polynomial = j.at("is_polynomial").get<bool>();
    r.is_nonneg_int = j.at("is_nonneg_int").get<bool>();
    r.route = j.at("route").get<std::string>();
    if (!j.at("corner_removal").is_null())
        r.corner_removal = partition_from_json(j.at("corner_removal"));
    return r;
}

}  // namespace jack

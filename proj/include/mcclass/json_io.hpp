#pragma once

// Canonical JSON forms.
//   laurent_poly:  {"vars": [...], "terms": [{"exp": [...], "y": [c0, c1, ...]}]}
//   rational_expr: {"num": <laurent_poly>, "den": <laurent_poly>}
// Integers that do not fit in 64 bits are written as decimal strings.

#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "expr.hpp"
#include "laurent_poly.hpp"
#include "rational_expr.hpp"

namespace mcc {

using json = nlohmann::ordered_json;

inline json big_int_to_json(const big_int& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(c));
    return json(c.str());
}

inline big_int big_int_from_json(const json& j) {
    if (j.is_number_integer()) return big_int(j.get<long long>());
    if (j.is_string()) return big_int(j.get<std::string>());
    throw invalid_input("expected an integer");
}

inline json to_json(const ypoly& c) {
    json a = json::array();
    for (const auto& x : c.coeffs()) a.push_back(big_int_to_json(x));
    return a;
}

inline ypoly ypoly_from_json(const json& j) {
    if (!j.is_array()) throw invalid_input("y-coefficient must be an array");
    std::vector<big_int> cs;
    for (const auto& x : j) cs.push_back(big_int_from_json(x));
    return ypoly(std::move(cs));
}

inline json to_json(const laurent_poly& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json e = json::array();
        for (int x : t.exp) e.push_back(x);
        terms.push_back(json{{"exp", std::move(e)}, {"y", to_json(t.coeff)}});
    }
    return json{{"vars", p.vars().names()}, {"terms", std::move(terms)}};
}

inline laurent_poly laurent_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars")) throw invalid_input("polynomial JSON needs a \"vars\" list");
    variables vars(j.at("vars").get<std::vector<std::string>>());
    if (j.contains("expr")) return parse_laurent(j.at("expr").get<std::string>(), vars);
    std::vector<term> ts;
    for (const auto& t : j.at("terms")) {
        exponent e;
        for (const auto& x : t.at("exp")) e.push_back(x.get<int>());
        ts.push_back({std::move(e), ypoly_from_json(t.at("y"))});
    }
    return laurent_poly::from_terms(vars, std::move(ts));
}

inline json to_json(const rational_expr& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline rational_expr rational_from_json(const json& j) {
    if (j.contains("num")) return rational_expr(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
    return rational_expr(laurent_from_json(j));
}

}  // namespace mcc

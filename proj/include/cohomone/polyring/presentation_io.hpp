#pragma once

// Presentation files:
//   {"schema": "1",
//    "variables": [{"name": "x1", "degree": 2}, {"name": "u", "degree": 2}],
//    "generators": ["x1^2 - u^2", "x1"]}

#include <set>
#include <string>

#include <json.hpp>

#include "cohomone/polyring/hilbert.hpp"
#include "cohomone/polyring/parser.hpp"

namespace cohomone::poly {

inline nlohmann::json presentation_to_json(const IdealPresentation& p)
{
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : p.ring()->variables())
        vars.push_back({{"degree", v.degree}, {"name", v.name}});
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : p.generators())
        gens.push_back(g.to_string());
    return {{"generators", gens}, {"schema", "1"}, {"variables", vars}};
}

inline IdealPresentation presentation_from_json(const nlohmann::json& j)
{
    const auto fail = [](const std::string& msg) -> void { throw Error(ErrorKind::Parse, "presentation: " + msg); };
    if (!j.is_object())
        fail("expected a JSON object");
    static const std::set<std::string> known{"schema", "variables", "generators", "name"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key))
            fail("unknown field \"" + key + "\"");
    if (j.contains("schema") && j["schema"] != "1")
        fail("unsupported schema " + j["schema"].dump());
    if (!j.contains("variables") || !j["variables"].is_array())
        fail("\"variables\" must be an array");
    if (!j.contains("generators") || !j["generators"].is_array())
        fail("\"generators\" must be an array");

    std::vector<Variable> vars;
    for (const auto& v : j["variables"]) {
        if (v.is_string()) {
            vars.push_back({v.get<std::string>(), 2});
            continue;
        }
        if (!v.is_object() || !v.contains("name") || !v["name"].is_string())
            fail("each variable needs a \"name\"");
        for (const auto& [key, value] : v.items())
            if (key != "name" && key != "degree")
                fail("unknown variable field \"" + key + "\"");
        int degree = 2;
        if (v.contains("degree")) {
            if (!v["degree"].is_number_integer())
                fail("variable degree must be an integer");
            degree = v["degree"].get<int>();
        }
        vars.push_back({v["name"].get<std::string>(), degree});
    }
    const RingPtr ring = make_ring(std::move(vars));
    std::vector<Polynomial> gens;
    for (const auto& g : j["generators"]) {
        if (!g.is_string())
            fail("generators must be strings");
        gens.push_back(parse_polynomial(ring, g.get<std::string>()));
    }
    return IdealPresentation(ring, std::move(gens));
}

} // namespace cohomone::poly

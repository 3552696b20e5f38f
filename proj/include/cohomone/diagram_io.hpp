#pragma once

// Diagram files:
//   {"schema": "1", "name": "...", "orbit_space": "interval",
//    "G": "B2", "K-": "D2", "K+": "B1+T1", "H": "B1",
//    "weyl_order": 2, "normalizer_order": 6,
//    "family": "torus", "k": 3, "alpha": [1, 0, 0]}
//
// Only G and H are given for circle orbit spaces. Unknown keys are rejected.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cohomone/diagram.hpp"

namespace cohomone {

struct TorusFamilyData {
    std::size_t k = 0;
    std::vector<Rational> alpha;

    bool operator==(const TorusFamilyData&) const = default;
};

struct DiagramInput {
    std::optional<std::string> name;
    GroupDiagram diagram;
    std::optional<Integer> weyl_order;
    std::optional<Integer> normalizer_order;
    std::optional<TorusFamilyData> family;
};

namespace detail {

inline std::string line_col(std::string_view text, std::size_t offset)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

// Offset of the value belonging to "key" in the raw text (best effort).
inline std::size_t value_offset(std::string_view text, const std::string& key)
{
    const std::string quoted = "\"" + key + "\"";
    std::size_t p = text.find(quoted);
    if (p == std::string_view::npos)
        return 0;
    p += quoted.size();
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t' || text[p] == '\n' || text[p] == '\r' ||
                               text[p] == ':'))
        ++p;
    return p;
}

inline Integer positive_integer(const nlohmann::json& v, const std::string& what)
{
    Integer z;
    if (v.is_number_unsigned() || v.is_number_integer()) {
        z = Integer(v.dump());
    } else if (v.is_string() && !v.get<std::string>().empty() &&
               v.get<std::string>().find_first_not_of("0123456789") == std::string::npos) {
        z = Integer(v.get<std::string>());
    } else {
        throw Error(ErrorKind::Parse, "\"" + what + "\" must be a positive integer");
    }
    if (z <= 0)
        throw Error(ErrorKind::Parse, "\"" + what + "\" must be a positive integer");
    return z;
}

inline Rational rational_value(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return Rational(Integer(v.dump()));
    if (v.is_string()) {
        Rational q;
        if (q.set_str(v.get<std::string>(), 10) == 0 && q.get_den() != 0) {
            q.canonicalize();
            return q;
        }
    }
    throw Error(ErrorKind::Parse, "alpha entries must be integers or \"p/q\" strings");
}

} // namespace detail

/// Strict parse of a diagram document. Error messages are prefixed with
/// "origin:line:col:".
inline DiagramInput parse_diagram(std::string_view text, const std::string& origin = "<input>")
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        std::string msg = e.what();
        if (auto p = msg.find("parse error"); p != std::string::npos)
            msg = msg.substr(p);
        throw Error(ErrorKind::Parse, origin + ":" + detail::line_col(text, at) + ": " + msg, at);
    }

    std::string current_key;
    const auto fail = [&](const std::string& msg) {
        const std::size_t at = current_key.empty() ? 0 : detail::value_offset(text, current_key);
        throw Error(ErrorKind::Parse, origin + ":" + detail::line_col(text, at) + ": " + msg, at);
    };

    if (!j.is_object()) {
        fail("expected a JSON object");
    }
    static const std::set<std::string> known{"schema",     "name",             "orbit_space", "G",    "K-", "K+",
                                             "H",          "weyl_order",       "family",      "k",    "alpha",
                                             "normalizer_order"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) {
            current_key = key;
            fail("unknown field \"" + key + "\"");
        }

    DiagramInput in;
    try {
        if (j.contains("schema")) {
            current_key = "schema";
            if (j["schema"] != "1")
                fail("unsupported schema " + j["schema"].dump() + " (expected \"1\")");
        }
        if (j.contains("name")) {
            current_key = "name";
            if (!j["name"].is_string())
                fail("\"name\" must be a string");
            in.name = j["name"].get<std::string>();
        }
        std::string orbit = "interval";
        if (j.contains("orbit_space")) {
            current_key = "orbit_space";
            if (!j["orbit_space"].is_string())
                fail("\"orbit_space\" must be \"interval\" or \"circle\"");
            orbit = j["orbit_space"].get<std::string>();
            if (orbit != "interval" && orbit != "circle")
                fail("\"orbit_space\" must be \"interval\" or \"circle\"");
        }
        const auto group = [&](const std::string& key, bool required) -> std::optional<CompactGroupType> {
            current_key = key;
            if (!j.contains(key)) {
                if (required)
                    fail("missing field \"" + key + "\"");
                return std::nullopt;
            }
            if (!j[key].is_string())
                fail("\"" + key + "\" must be a group literal string");
            const std::string lit = j[key].get<std::string>();
            try {
                return parse_group(lit);
            } catch (const Error& e) {
                const std::size_t at = detail::value_offset(text, key) + 1 + e.position().value_or(0);
                throw Error(ErrorKind::Parse, origin + ":" + detail::line_col(text, at) + ": \"" + key +
                                                  "\": " + e.what(),
                            at);
            }
        };
        const auto g = group("G", true);
        const auto h = group("H", true);
        if (orbit == "interval") {
            const auto km = group("K-", true);
            const auto kp = group("K+", true);
            in.diagram = GroupDiagram::interval(*g, *km, *kp, *h);
        } else {
            for (const std::string key : {"K-", "K+"})
                if (j.contains(key)) {
                    current_key = key;
                    fail("circle orbit spaces have no \"" + key + "\"");
                }
            in.diagram = GroupDiagram::circle(*g, *h);
        }
        for (const std::string key : {"weyl_order", "normalizer_order"}) {
            if (!j.contains(key))
                continue;
            current_key = key;
            const Integer v = detail::positive_integer(j[key], key);
            (key == "weyl_order" ? in.weyl_order : in.normalizer_order) = v;
        }
        if (j.contains("family") || j.contains("k") || j.contains("alpha")) {
            current_key = "family";
            if (!j.contains("family") || j["family"] != "torus")
                fail("\"family\" must be \"torus\" when family data is given");
            current_key = "k";
            if (!j.contains("k") || !j["k"].is_number_unsigned() || j["k"].get<std::size_t>() == 0)
                fail("\"k\" must be a positive integer");
            current_key = "alpha";
            if (!j.contains("alpha") || !j["alpha"].is_array())
                fail("\"alpha\" must be an array");
            TorusFamilyData fam;
            fam.k = j["k"].get<std::size_t>();
            for (const auto& a : j["alpha"])
                fam.alpha.push_back(detail::rational_value(a));
            if (fam.alpha.size() != fam.k)
                fail("\"alpha\" must have k = " + std::to_string(fam.k) + " entries");
            if (std::all_of(fam.alpha.begin(), fam.alpha.end(), [](const Rational& a) { return a == 0; }))
                fail("\"alpha\" must be nonzero");
            in.family = std::move(fam);
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Parse || std::string(e.what()).rfind(origin + ":", 0) == 0)
            throw;
        fail(e.what());
    }
    return in;
}

inline nlohmann::json diagram_to_json(const DiagramInput& in)
{
    nlohmann::json j;
    j["schema"] = "1";
    if (in.name)
        j["name"] = *in.name;
    const GroupDiagram& d = in.diagram;
    j["orbit_space"] = to_string(d.orbit_space);
    j["G"] = d.g.to_string();
    j["H"] = d.h.to_string();
    if (d.is_interval()) {
        j["K-"] = d.k_minus.to_string();
        j["K+"] = d.k_plus.to_string();
    }
    if (in.weyl_order)
        j["weyl_order"] = integer_to_json(*in.weyl_order);
    if (in.normalizer_order)
        j["normalizer_order"] = integer_to_json(*in.normalizer_order);
    if (in.family) {
        j["family"] = "torus";
        j["k"] = in.family->k;
        nlohmann::json a = nlohmann::json::array();
        for (const auto& q : in.family->alpha)
            a.push_back(rational_to_json(q));
        j["alpha"] = a;
    }
    return j;
}

} // namespace cohomone

#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "shrubs/anticyclic.hpp"
#include "shrubs/genword.hpp"
#include "shrubs/shrub.hpp"

namespace shrubs {

using json = nlohmann::json;

inline json label_to_json(const Label& l)
{
    if (l.is_numeric() && l.str().size() < 18 && (l.str() == "0" || l.str().front() != '0'))
        return std::stoll(l.str());
    return l.str();
}

inline Label label_from_json(const json& j)
{
    if (j.is_number_integer())
        return Label(j.get<long long>());
    if (j.is_string())
        return Label(j.get<std::string>());
    throw error(errc::parse_error, "label must be a string or an integer, got " + j.dump());
}

/// {"vertices": [...], "height": {"v": h, ...}, "edges": [[a, b], ...]}
inline json shrub_to_json(const Shrub& p)
{
    json vertices = json::array();
    json height = json::object();
    json edges = json::array();
    for (std::size_t v = 0; v < p.size(); ++v) {
        vertices.push_back(label_to_json(p.label(v)));
        height[p.label(v).str()] = p.height(v);
    }
    for (const auto& [a, b] : p.edges())
        edges.push_back(json::array({label_to_json(a), label_to_json(b)}));
    return {{"vertices", vertices}, {"height", height}, {"edges", edges}};
}

inline Shrub shrub_from_json(const json& j)
{
    try {
        std::vector<Label> vertices;
        for (const auto& v : j.at("vertices"))
            vertices.push_back(label_from_json(v));
        HeightMap height;
        for (const auto& [k, v] : j.at("height").items())
            height.emplace(Label(k), v.get<int>());
        std::vector<LabelPair> edges;
        for (const auto& e : j.value("edges", json::array())) {
            if (!e.is_array() || e.size() != 2)
                throw error(errc::parse_error, "edge must be a pair, got " + e.dump());
            edges.emplace_back(label_from_json(e[0]), label_from_json(e[1]));
        }
        return validate_shrub(vertices, height, edges);
    } catch (const json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
}

inline json signed_shrub_to_json(const SignedShrub& x)
{
    json j = shrub_to_json(x.shrub);
    j["sign"] = x.sign;
    return j;
}

inline SignedShrub signed_shrub_from_json(const json& j)
{
    int sign = 1;
    if (j.contains("sign")) {
        if (!j.at("sign").is_number_integer() || (j.at("sign") != 1 && j.at("sign") != -1))
            throw error(errc::parse_error, "sign must be 1 or -1");
        sign = j.at("sign").get<int>();
    }
    return {sign, shrub_from_json(j)};
}

/// Leaves are labels; inner nodes are {"gen": "C"|"D", "slot": label, "args": [a, b]}.
inline json genword_to_json(const GenWord& w)
{
    if (w.is_leaf())
        return label_to_json(w.name);
    json args = json::array();
    for (const auto& a : w.args)
        args.push_back(genword_to_json(a));
    return {{"gen", w.gen == GenWord::Gen::C ? "C" : "D"}, {"slot", label_to_json(w.name)}, {"args", args}};
}

inline GenWord genword_from_json(const json& j)
{
    if (!j.is_object())
        return GenWord::leaf(label_from_json(j));
    try {
        const auto g = j.at("gen").get<std::string>();
        if (g != "C" && g != "D")
            throw error(errc::malformed_word, "unknown generator '" + g + "'");
        GenWord w{g == "C" ? GenWord::Gen::C : GenWord::Gen::D, label_from_json(j.at("slot")), {}};
        for (const auto& a : j.at("args"))
            w.args.push_back(genword_from_json(a));
        if (w.args.size() != 2)
            throw error(errc::malformed_word, "generator node needs two arguments");
        return w;
    } catch (const json::exception& e) {
        throw error(errc::malformed_word, e.what());
    }
}

inline json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
}

/// Graphviz drawing, one rank per height, height 0 at the bottom.
inline std::string to_dot(const Shrub& p)
{
    auto quote = [](const Label& l) {
        std::string s = "\"";
        for (char c : l.str()) {
            if (c == '"' || c == '\\')
                s += '\\';
            s += c;
        }
        return s + "\"";
    };
    std::ostringstream os;
    os << "graph shrub {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int h = 0; h <= p.max_height(); ++h) {
        os << "  { rank=same;";
        for (std::size_t v = 0; v < p.size(); ++v)
            if (p.height(v) == h)
                os << " " << quote(p.label(v)) << ";";
        os << " }\n";
    }
    for (const auto& [a, b] : p.edges())
        os << "  " << quote(a) << " -- " << quote(b) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace shrubs

#include "spslab/io.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace spslab {

namespace {

using json = nlohmann::ordered_json;

bool valid_point_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-')
            return false;
    return true;
}

[[noreturn]] void schema_error(const std::string& msg) {
    throw ParseError(ParseError::Kind::Schema, msg);
}

[[noreturn]] void axiom_error(const ValidationReport& rep) {
    throw ParseError(ParseError::Kind::Axiom, rep.violations.front().axiom + ": " +
                                                  rep.violations.front().detail);
}

std::vector<std::string> string_list(const json& j, const std::string& field) {
    if (!j.is_array()) schema_error("'" + field + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) schema_error("'" + field + "' must contain only strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

const json& field(const json& j, const std::string& name) {
    auto it = j.find(name);
    if (it == j.end()) schema_error("document missing '" + name + "'");
    return *it;
}

FiniteClosureSpace parse_closure_space(const json& doc) {
    auto points = string_list(field(doc, "points"), "points");
    if (points.empty()) schema_error("'points' must not be empty");
    for (const auto& p : points)
        if (!valid_point_label(p))
            schema_error("point label '" + p + "' (allowed: letters, digits, '_', '.', '-')");
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        schema_error("duplicate point label");
    PointUniverse universe(points);

    const json& sets = field(doc, "closed_sets");
    if (!sets.is_array()) schema_error("'closed_sets' must be an array of label arrays");
    std::vector<Bitset> members;
    for (const auto& entry : sets) {
        auto labels = string_list(entry, "closed_sets");
        Bitset s(universe.size());
        for (const auto& l : labels) {
            auto idx = universe.find(l);
            if (!idx) schema_error("closed set mentions unknown point '" + l + "'");
            s.set(*idx);
        }
        members.push_back(s);
    }

    auto v = validate_closure_space(universe, SetFamily(universe.size(), std::move(members)));
    if (!v.report.passed()) axiom_error(v.report);
    return std::move(*v.space);
}

StatePropertySystem parse_sps(const json& doc) {
    auto states = string_list(field(doc, "states"), "states");
    if (states.empty()) schema_error("'states' must not be empty");
    for (const auto& s : states)
        if (!valid_point_label(s))
            schema_error("state label '" + s + "' (allowed: letters, digits, '_', '.', '-')");
    std::sort(states.begin(), states.end());
    if (std::adjacent_find(states.begin(), states.end()) != states.end())
        schema_error("duplicate state label");
    PointUniverse universe(states);

    auto properties = string_list(field(doc, "properties"), "properties");
    if (properties.empty()) schema_error("'properties' must not be empty");
    {
        auto sorted = properties;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            schema_error("duplicate property name");
    }
    std::unordered_map<std::string, int> prop_index;
    for (int i = 0; i < int(properties.size()); ++i) prop_index.emplace(properties[i], i);

    const json& leq = field(doc, "leq");
    if (!leq.is_array()) schema_error("'leq' must be an array of [a, b] pairs");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& entry : leq) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_string())
            schema_error("'leq' entries must be [property, property] pairs");
        std::string a = entry[0].get<std::string>(), b = entry[1].get<std::string>();
        if (!prop_index.count(a)) schema_error("'leq' mentions unknown property '" + a + "'");
        if (!prop_index.count(b)) schema_error("'leq' mentions unknown property '" + b + "'");
        pairs.emplace_back(std::move(a), std::move(b));
    }
    auto lv = validate_lattice(properties, pairs);
    if (!lv.report.passed()) axiom_error(lv.report);

    const json& xi_doc = field(doc, "xi");
    if (!xi_doc.is_object()) schema_error("'xi' must map states to property arrays");
    std::vector<Bitset> xi(universe.size(), Bitset(int(properties.size())));
    std::vector<bool> seen(universe.size(), false);
    for (const auto& [state, props] : xi_doc.items()) {
        auto s = universe.find(state);
        if (!s) schema_error("'xi' mentions unknown state '" + state + "'");
        if (seen[*s]) schema_error("'xi' repeats state '" + state + "'");
        seen[*s] = true;
        for (const auto& name : string_list(props, "xi")) {
            auto it = prop_index.find(name);
            if (it == prop_index.end())
                schema_error("'xi' mentions unknown property '" + name + "'");
            xi[*s].set(it->second);
        }
    }
    for (int p = 0; p < universe.size(); ++p)
        if (!seen[p]) schema_error("'xi' is missing state '" + universe.label(p) + "'");

    auto sv = validate_sps(universe, *lv.lattice, xi);
    if (!sv.report.passed()) axiom_error(sv.report);
    return std::move(*sv.sps);
}

json subset_labels(const PointUniverse& u, const Bitset& s) {
    json arr = json::array();
    s.for_each([&](int i) { arr.push_back(u.label(i)); });
    return arr;
}

} // namespace

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(ParseError::Kind::Syntax, e.what());
    }
    if (!doc.is_object()) schema_error("document must be an object");
    const json& version = field(doc, "version");
    if (!version.is_number_integer() || version.get<int>() != 1)
        schema_error("unsupported format version");
    const json& kind = field(doc, "kind");
    if (!kind.is_string()) schema_error("'kind' must be a string");
    std::string k = kind.get<std::string>();
    if (k == "closure-space") return parse_closure_space(doc);
    if (k == "sps") return parse_sps(doc);
    schema_error("unknown kind '" + k + "'");
}

std::string serialize_instance(const FiniteClosureSpace& space) {
    json doc;
    doc["version"] = 1;
    doc["kind"] = "closure-space";
    doc["points"] = space.universe().labels();
    json sets = json::array();
    for (const auto& f : space.closed()) sets.push_back(subset_labels(space.universe(), f));
    doc["closed_sets"] = std::move(sets);
    return doc.dump(2) + "\n";
}

std::string serialize_instance(const StatePropertySystem& sps) {
    const auto& lat = sps.lattice();
    json doc;
    doc["version"] = 1;
    doc["kind"] = "sps";
    doc["states"] = sps.states().labels();
    doc["properties"] = lat.names();
    json leq = json::array();
    for (int a = 0; a < lat.size(); ++a)
        for (int b = 0; b < lat.size(); ++b)
            if (lat.leq(a, b)) leq.push_back(json::array({lat.name(a), lat.name(b)}));
    doc["leq"] = std::move(leq);
    json xi = json::object();
    for (int p = 0; p < sps.state_count(); ++p) {
        std::vector<std::string> names;
        sps.xi(p).for_each([&](int a) { names.push_back(lat.name(a)); });
        std::sort(names.begin(), names.end());
        xi[sps.states().label(p)] = names;
    }
    doc["xi"] = std::move(xi);
    return doc.dump(2) + "\n";
}

std::string serialize_instance(const Instance& instance) {
    return std::visit([](const auto& v) { return serialize_instance(v); }, instance);
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace spslab

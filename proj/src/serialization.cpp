#include "moishezon/serialization.hpp"

#include <fstream>
#include <sstream>

#include "moishezon/errors.hpp"

namespace moishezon {

using nlohmann::json;

namespace {

std::string exponent_key(const Exponents& e) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(e[i]);
    }
    return key;
}

Exponents parse_exponent_key(const std::string& key) {
    Exponents e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw SchemaError("top_form: bad exponent key \"" + key + "\"");
        }
        e.push_back(std::stoi(part));
    }
    if (e.empty()) throw SchemaError("top_form: empty exponent key");
    return e;
}

const json& require(const json& j, const char* field) {
    if (!j.is_object() || !j.contains(field)) throw SchemaError(std::string("missing field \"") + field + "\"");
    return j.at(field);
}

std::size_t line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

}  // namespace

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw SchemaError(field + ": expected a \"p/q\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SchemaError(field + ": " + e.what());
    }
}

json space_to_json(const SpaceModel& space) {
    json top = json::object();
    for (const auto& [mono, value] : space.top_form()) top[exponent_key(mono)] = rational_to_json(value);
    json canonical = json::array();
    for (Eigen::Index i = 0; i < space.canonical().size(); ++i) canonical.push_back(space.canonical()(i).to_int64());
    json curves = json::array();
    for (const auto& c : space.curves()) {
        json pairings = json::array();
        for (Eigen::Index i = 0; i < c.pairings.size(); ++i) pairings.push_back(rational_to_json(c.pairings(i)));
        curves.push_back({{"name", c.name}, {"pairings", pairings}});
    }
    return {{"name", space.name()},
            {"dim", space.dim()},
            {"basis", space.basis()},
            {"top_form", top},
            {"canonical", canonical},
            {"curves", curves}};
}

SpaceModel space_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("space document must be a JSON object");

    const auto& name = require(j, "name");
    if (!name.is_string()) throw SchemaError("name: expected a string");

    const auto& dim = require(j, "dim");
    if (!dim.is_number_integer() || dim.get<int>() < 1) throw SchemaError("dim: expected a positive integer");

    const auto& basis_json = require(j, "basis");
    if (!basis_json.is_array()) throw SchemaError("basis: expected an array of strings");
    std::vector<std::string> basis;
    for (const auto& b : basis_json) {
        if (!b.is_string()) throw SchemaError("basis: expected an array of strings");
        basis.push_back(b.get<std::string>());
    }

    const auto& top_json = require(j, "top_form");
    if (!top_json.is_object()) throw SchemaError("top_form: expected an object");
    std::map<Exponents, Rational> top;
    for (const auto& [key, value] : top_json.items()) {
        Exponents e = parse_exponent_key(key);
        if (e.size() != basis.size()) throw SchemaError("top_form[\"" + key + "\"]: length differs from basis");
        top.emplace(std::move(e), rational_from_json(value, "top_form[\"" + key + "\"]"));
    }

    const auto& canonical_json = require(j, "canonical");
    if (!canonical_json.is_array()) throw SchemaError("canonical: expected an array of integers");
    DivisorClass canonical(static_cast<Eigen::Index>(canonical_json.size()));
    for (std::size_t i = 0; i < canonical_json.size(); ++i) {
        const std::string field = "canonical[" + std::to_string(i) + "]";
        canonical(static_cast<Eigen::Index>(i)) = rational_from_json(canonical_json[i], field);
        if (!canonical(static_cast<Eigen::Index>(i)).is_integer()) throw SchemaError(field + ": expected an integer");
    }

    std::vector<CurveClass> curves;
    if (j.contains("curves")) {
        const auto& curves_json = j.at("curves");
        if (!curves_json.is_array()) throw SchemaError("curves: expected an array");
        for (std::size_t i = 0; i < curves_json.size(); ++i) {
            const std::string prefix = "curves[" + std::to_string(i) + "]";
            const auto& c = curves_json[i];
            if (!c.is_object() || !c.contains("name") || !c.at("name").is_string() || !c.contains("pairings") ||
                !c.at("pairings").is_array()) {
                throw SchemaError(prefix + ": expected {\"name\": string, \"pairings\": array}");
            }
            const auto& p = c.at("pairings");
            RationalVector pairings(static_cast<Eigen::Index>(p.size()));
            for (std::size_t k = 0; k < p.size(); ++k) {
                pairings(static_cast<Eigen::Index>(k)) =
                    rational_from_json(p[k], prefix + ".pairings[" + std::to_string(k) + "]");
            }
            curves.push_back({c.at("name").get<std::string>(), std::move(pairings)});
        }
    }

    try {
        return SpaceModel(name.get<std::string>(), dim.get<int>(), std::move(basis), std::move(top),
                          std::move(canonical), std::move(curves));
    } catch (const DomainError& e) {
        throw SchemaError(e.what());
    }
}

std::string serialize_space(const SpaceModel& space) { return space_to_json(space).dump(2) + "\n"; }

SpaceModel parse_space(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
    return space_from_json(j);
}

SpaceModel parse_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open space file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_space(buffer.str());
}

}  // namespace moishezon

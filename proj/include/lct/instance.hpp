// instance.hpp : the on-disk instance format.
//
// One JSON object per instance:
//
//   { "n": 3, "kind": "ideal", "label": "cusp",
//     "generators": [[2,0,0],[0,3,0]] }
//
// Entries are nonnegative integers; weight instances may also use exact
// rational strings "p/q". Anything else is a parse error.
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lct/newton.hpp"
#include "lct/rational.hpp"

namespace lct {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline singularity_input instance_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw parse_error("instance must be a JSON object");
    singularity_input in;
    try {
        if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
            throw parse_error("field 'n' must be a positive integer");
        in.n = doc["n"].get<std::size_t>();
        const std::string kind = doc.value("kind", std::string());
        if (kind == "ideal") in.kind = generator_kind::ideal;
        else if (kind == "weight") in.kind = generator_kind::weight;
        else throw parse_error("field 'kind' must be \"ideal\" or \"weight\"");
        in.label = doc.value("label", std::string());
        if (!doc.contains("generators") || !doc["generators"].is_array() ||
            doc["generators"].empty())
            throw parse_error("field 'generators' must be a nonempty array");
        for (const auto& row : doc["generators"]) {
            if (!row.is_array()) throw parse_error("each generator must be an array");
            exponent_vector g;
            for (const auto& entry : row) {
                if (entry.is_number_integer()) {
                    const long long v = entry.get<long long>();
                    if (v < 0) throw parse_error("negative exponent in generator");
                    g.push_back(rational(v));
                } else if (entry.is_string()) {
                    if (in.kind != generator_kind::weight)
                        throw parse_error("rational strings are only allowed for weight instances");
                    g.push_back(parse_rational(entry.get<std::string>()));
                } else {
                    throw parse_error("generator entries must be integers or \"p/q\" strings");
                }
            }
            in.generators.push_back(std::move(g));
        }
        in.validate();
    } catch (const invalid_input& e) {
        throw parse_error(e.what());
    }
    return in;
}

inline nlohmann::json instance_to_json(const singularity_input& in) {
    nlohmann::json doc;
    doc["n"] = in.n;
    doc["kind"] = in.kind == generator_kind::ideal ? "ideal" : "weight";
    if (!in.label.empty()) doc["label"] = in.label;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : in.generators) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : g) {
            if (is_integral(c)) row.push_back(numerator(c).convert_to<long long>());
            else row.push_back(to_pq_string(c));
        }
        gens.push_back(std::move(row));
    }
    doc["generators"] = std::move(gens);
    return doc;
}

inline singularity_input load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open instance file: " + path);
    nlohmann::json doc;
    try {
        f >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("invalid JSON in " + path + ": " + e.what());
    }
    return instance_from_json(doc);
}

}  // namespace lct

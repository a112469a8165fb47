#include <json.hpp>

#include "brauer/configuration.hpp"

namespace brauer {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) {
    throw ParseError("malformed configuration: " + what);
}

} // namespace

Configuration configuration_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        malformed("top level must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        malformed("\"vertices\" must be an array of labels");
    if (!doc.contains("polygons") || !doc["polygons"].is_array())
        malformed("\"polygons\" must be an array");

    std::vector<std::string> labels;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string())
            malformed("vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    auto vertex_of = [&](const std::string& label) -> VertexId {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return static_cast<VertexId>(i);
        malformed("unknown vertex label '" + label + "'");
    };

    std::vector<PolygonSpec> specs;
    for (const auto& p : doc["polygons"]) {
        if (!p.is_object() || !p.contains("id") || !p.contains("members"))
            malformed("each polygon needs \"id\" and \"members\"");
        if (!p["id"].is_number_integer())
            malformed("polygon id must be an integer");
        PolygonSpec spec;
        spec.id = p["id"].get<int>();
        if (!p["members"].is_array())
            malformed("polygon members must be an array of labels");
        for (const auto& m : p["members"]) {
            if (!m.is_string())
                malformed("polygon members must be vertex labels");
            spec.members.push_back(vertex_of(m.get<std::string>()));
        }
        specs.push_back(std::move(spec));
    }

    std::map<VertexId, std::int64_t> mu;
    if (doc.contains("mu")) {
        if (!doc["mu"].is_object())
            malformed("\"mu\" must map vertex labels to positive integers");
        for (const auto& [label, value] : doc["mu"].items()) {
            if (!value.is_number_integer())
                malformed("multiplicity of '" + label + "' must be an integer");
            mu[vertex_of(label)] = value.get<std::int64_t>();
        }
    }

    std::map<VertexId, std::vector<PolygonId>> orientation;
    if (doc.contains("orientation")) {
        if (!doc["orientation"].is_object())
            malformed("\"orientation\" must map vertex labels to polygon id lists");
        for (const auto& [label, seq] : doc["orientation"].items()) {
            if (!seq.is_array())
                malformed("successor sequence of '" + label + "' must be an array");
            std::vector<PolygonId> ids;
            for (const auto& id : seq) {
                if (!id.is_number_integer())
                    malformed("successor sequences hold polygon ids");
                ids.push_back(id.get<int>());
            }
            orientation[vertex_of(label)] = std::move(ids);
        }
    }

    try {
        return make_configuration(std::move(labels), std::move(specs), std::move(mu),
                                  std::move(orientation));
    } catch (const UnknownIdError& e) {
        throw ParseError(std::string("malformed configuration: ") + e.what());
    }
}

std::string configuration_to_json(const Configuration& cfg) {
    ordered_json doc;
    doc["vertices"] = cfg.vertex_labels;
    doc["polygons"] = ordered_json::array();
    for (const auto& p : cfg.polygons) {
        ordered_json poly;
        poly["id"] = p.id;
        auto members = ordered_json::array();
        for (const auto& [v, c] : p.members)
            for (int i = 0; i < c; ++i)
                members.push_back(cfg.vertex_labels[v]);
        poly["members"] = std::move(members);
        doc["polygons"].push_back(std::move(poly));
    }
    doc["mu"] = ordered_json::object();
    for (VertexId v = 0; v < cfg.vertex_count(); ++v)
        doc["mu"][cfg.vertex_labels[v]] = cfg.multiplicity[v];
    doc["orientation"] = ordered_json::object();
    for (VertexId v = 0; v < cfg.vertex_count(); ++v)
        if (!cfg.orientation[v].empty())
            doc["orientation"][cfg.vertex_labels[v]] = cfg.orientation[v];
    return doc.dump(2) + "\n";
}

} // namespace brauer

#include "brauer/configuration.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace brauer {

int Polygon::total_size() const {
    int total = 0;
    for (const auto& [v, c] : members)
        total += c;
    return total;
}

int Polygon::count_of(VertexId v) const {
    for (const auto& [vertex, count] : members)
        if (vertex == v)
            return count;
    return 0;
}

std::vector<VertexId> Polygon::support() const {
    std::vector<VertexId> out;
    out.reserve(members.size());
    for (const auto& [vertex, count] : members)
        out.push_back(vertex);
    return out;
}

bool Polygon::is_set() const {
    for (const auto& [vertex, count] : members)
        if (count != 1)
            return false;
    return true;
}

std::string ValidationReport::to_string() const {
    if (ok())
        return "valid Brauer configuration\n";
    std::ostringstream out;
    for (const auto& v : violations) {
        switch (v.kind) {
            case ViolationKind::C1: out << "C1 violated: "; break;
            case ViolationKind::C2: out << "C2 violated: "; break;
            case ViolationKind::C3: out << "C3 violated: "; break;
            case ViolationKind::Orientation: out << "orientation violated: "; break;
        }
        out << v.detail << "\n";
    }
    return out.str();
}

bool Configuration::has_vertex(VertexId v) const {
    return v >= 0 && v < vertex_count();
}

bool Configuration::has_polygon(PolygonId id) const {
    for (const auto& p : polygons)
        if (p.id == id)
            return true;
    return false;
}

int Configuration::polygon_index(PolygonId id) const {
    for (int i = 0; i < polygon_count(); ++i)
        if (polygons[i].id == id)
            return i;
    throw UnknownIdError("unknown polygon id " + std::to_string(id));
}

const Polygon& Configuration::polygon(PolygonId id) const {
    return polygons[polygon_index(id)];
}

VertexId Configuration::vertex_by_label(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertex_labels[i] == label)
            return i;
    throw UnknownIdError("unknown vertex label '" + label + "'");
}

namespace {

void require_vertex(const Configuration& cfg, VertexId v) {
    if (!cfg.has_vertex(v))
        throw UnknownIdError("unknown vertex id " + std::to_string(v));
}

std::int64_t raw_val(const Configuration& cfg, VertexId v) {
    std::int64_t total = 0;
    for (const auto& p : cfg.polygons)
        total = checked_add(total, p.count_of(v));
    return total;
}

bool raw_truncated(const Configuration& cfg, VertexId v) {
    return raw_val(cfg, v) == 1 && cfg.multiplicity[v] == 1;
}

} // namespace

Configuration make_configuration(std::vector<std::string> vertex_labels,
                                 std::vector<PolygonSpec> polygon_specs,
                                 std::map<VertexId, std::int64_t> mu,
                                 std::map<VertexId, std::vector<PolygonId>> orientation) {
    Configuration cfg;
    cfg.vertex_labels = std::move(vertex_labels);

    {
        std::set<std::string> seen;
        for (const auto& label : cfg.vertex_labels)
            if (!seen.insert(label).second)
                throw ParseError("duplicate vertex label '" + label + "'");
    }

    std::set<PolygonId> seen_ids;
    for (const auto& spec : polygon_specs) {
        if (spec.id < 0)
            throw ParseError("polygon id must be nonnegative, got " + std::to_string(spec.id));
        if (!seen_ids.insert(spec.id).second)
            throw ParseError("duplicate polygon id " + std::to_string(spec.id));
        Polygon p;
        p.id = spec.id;
        std::map<VertexId, int> counts;
        for (VertexId v : spec.members) {
            if (v < 0 || v >= cfg.vertex_count())
                throw UnknownIdError("polygon " + std::to_string(spec.id) +
                                     " references unknown vertex id " + std::to_string(v));
            counts[v] += 1;
        }
        p.members.assign(counts.begin(), counts.end());
        cfg.polygons.push_back(std::move(p));
    }
    std::sort(cfg.polygons.begin(), cfg.polygons.end(),
              [](const Polygon& a, const Polygon& b) { return a.id < b.id; });

    cfg.multiplicity.assign(cfg.vertex_labels.size(), 1);
    for (const auto& [v, m] : mu) {
        if (v < 0 || v >= cfg.vertex_count())
            throw UnknownIdError("multiplicity given for unknown vertex id " + std::to_string(v));
        if (m < 1)
            throw ParseError("multiplicity must be positive, got " + std::to_string(m) +
                             " for vertex '" + cfg.vertex_labels[v] + "'");
        cfg.multiplicity[v] = m;
    }

    cfg.orientation.assign(cfg.vertex_labels.size(), {});
    for (const auto& [v, seq] : orientation) {
        if (v < 0 || v >= cfg.vertex_count())
            throw UnknownIdError("orientation given for unknown vertex id " + std::to_string(v));
        for (PolygonId id : seq)
            if (!cfg.has_polygon(id))
                throw UnknownIdError("orientation of vertex '" + cfg.vertex_labels[v] +
                                     "' references unknown polygon id " + std::to_string(id));
        cfg.orientation[v] = seq;
    }

    // Canonical default sequence for every nontruncated vertex left without one.
    for (VertexId v = 0; v < cfg.vertex_count(); ++v) {
        if (!cfg.orientation[v].empty() || raw_truncated(cfg, v))
            continue;
        for (const auto& p : cfg.polygons)
            for (int i = 0; i < p.count_of(v); ++i)
                cfg.orientation[v].push_back(p.id);
    }
    return cfg;
}

std::int64_t occ(const Configuration& cfg, VertexId v, PolygonId p) {
    require_vertex(cfg, v);
    return cfg.polygon(p).count_of(v);
}

std::int64_t val(const Configuration& cfg, VertexId v) {
    require_vertex(cfg, v);
    return raw_val(cfg, v);
}

bool is_truncated(const Configuration& cfg, VertexId v) {
    require_vertex(cfg, v);
    return raw_truncated(cfg, v);
}

std::vector<VertexId> support(const Configuration& cfg, PolygonId p) {
    return cfg.polygon(p).support();
}

ValidationReport validate(const Configuration& cfg) {
    ValidationReport report;

    for (VertexId v = 0; v < cfg.vertex_count(); ++v)
        if (raw_val(cfg, v) == 0)
            report.violations.push_back(
                {ViolationKind::C1, "vertex '" + cfg.vertex_labels[v] + "' occurs in no polygon"});

    for (const auto& p : cfg.polygons)
        if (p.total_size() < 2)
            report.violations.push_back(
                {ViolationKind::C2, "polygon " + std::to_string(p.id) + " has " +
                                        std::to_string(p.total_size()) + " vertices, needs at least 2"});

    for (const auto& p : cfg.polygons) {
        bool has_nontruncated = false;
        for (const auto& [v, c] : p.members)
            if (raw_val(cfg, v) * cfg.multiplicity[v] > 1)
                has_nontruncated = true;
        if (!has_nontruncated && !p.members.empty())
            report.violations.push_back(
                {ViolationKind::C3,
                 "polygon " + std::to_string(p.id) + " has no vertex with val*mu > 1"});
    }

    for (VertexId v = 0; v < cfg.vertex_count(); ++v) {
        const auto& seq = cfg.orientation[v];
        if (raw_truncated(cfg, v)) {
            if (!seq.empty())
                report.violations.push_back(
                    {ViolationKind::Orientation,
                     "truncated vertex '" + cfg.vertex_labels[v] + "' carries a successor sequence"});
            continue;
        }
        std::int64_t value = raw_val(cfg, v);
        if (static_cast<std::int64_t>(seq.size()) != value) {
            report.violations.push_back(
                {ViolationKind::Orientation,
                 "successor sequence at '" + cfg.vertex_labels[v] + "' has length " +
                     std::to_string(seq.size()) + ", expected val = " + std::to_string(value)});
            continue;
        }
        for (const auto& p : cfg.polygons) {
            std::int64_t listed = std::count(seq.begin(), seq.end(), p.id);
            std::int64_t expected = p.count_of(v);
            if (listed != expected)
                report.violations.push_back(
                    {ViolationKind::Orientation,
                     "successor sequence at '" + cfg.vertex_labels[v] + "' lists polygon " +
                         std::to_string(p.id) + " " + std::to_string(listed) + " times, expected occ = " +
                         std::to_string(expected)});
        }
    }
    return report;
}

} // namespace brauer

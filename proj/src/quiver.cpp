#include "brauer/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace brauer {

std::int64_t IntervalTable::count(int interval, int polygon_index) const {
    if (interval < 0 || interval >= interval_count())
        throw PreconditionError("interval index " + std::to_string(interval) + " out of range");
    return std::count(runs[interval].begin(), runs[interval].end(), polygon_index);
}

std::int64_t IntervalTable::total_count(int polygon_index) const {
    std::int64_t total = 0;
    for (int i = 0; i < interval_count(); ++i)
        total += count(i, polygon_index);
    return total;
}

Quiver Quiver::build(const Configuration& cfg) {
    auto report = validate(cfg);
    if (!report.ok())
        throw InvalidConfigurationError("configuration is not a Brauer configuration:\n" +
                                        report.to_string());
    Quiver q;
    q.cfg_ = cfg;
    q.arrows_by_owner_.assign(cfg.vertex_count(), {});
    for (VertexId v = 0; v < cfg.vertex_count(); ++v) {
        const auto& seq = cfg.orientation[v];
        if (seq.empty())
            continue;  // truncated
        int t = static_cast<int>(seq.size());
        for (int pos = 1; pos <= t; ++pos) {
            Arrow a;
            a.id = static_cast<int>(q.arrows_.size());
            a.source = cfg.polygon_index(seq[pos - 1]);
            a.target = cfg.polygon_index(seq[pos % t]);
            a.owner = v;
            a.position = pos;
            q.arrows_by_owner_[v].push_back(a.id);
            q.arrows_.push_back(a);
        }
    }
    return q;
}

const Arrow& Quiver::arrow(int id) const {
    if (id < 0 || id >= arrow_count())
        throw UnknownIdError("unknown arrow id " + std::to_string(id));
    return arrows_[id];
}

const std::vector<int>& Quiver::arrows_of(VertexId owner) const {
    if (owner < 0 || owner >= cfg_.vertex_count())
        throw UnknownIdError("unknown vertex id " + std::to_string(owner));
    return arrows_by_owner_[owner];
}

std::vector<SpecialCycle> Quiver::special_cycles(VertexId owner) const {
    const auto& ids = arrows_of(owner);
    int t = static_cast<int>(ids.size());
    std::vector<SpecialCycle> cycles;
    cycles.reserve(t);
    for (int l = 1; l <= t; ++l) {
        SpecialCycle c;
        c.owner = owner;
        c.start = l;
        for (int i = 0; i < t; ++i)
            c.arrows.push_back(ids[(l - 1 + i) % t]);
        c.anchor = arrows_[c.arrows.front()].source;
        cycles.push_back(std::move(c));
    }
    return cycles;
}

std::vector<SpecialCycle> Quiver::special_cycles_at(VertexId owner, PolygonId at) const {
    int at_index = cfg_.polygon_index(at);
    if (is_truncated(cfg_, owner))
        throw PreconditionError("vertex '" + cfg_.vertex_labels[owner] +
                                "' is truncated and has no special cycles");
    if (occ(cfg_, owner, at) == 0)
        throw PreconditionError("vertex '" + cfg_.vertex_labels[owner] +
                                "' does not occur in polygon " + std::to_string(at));
    std::vector<SpecialCycle> out;
    for (auto& c : special_cycles(owner))
        if (c.anchor == at_index)
            out.push_back(std::move(c));
    return out;
}

std::vector<int> Quiver::rotation_at_first(VertexId owner, int polygon_index) const {
    const auto& seq = cfg_.orientation[owner];
    const auto& ids = arrows_of(owner);
    int t = static_cast<int>(seq.size());
    int first = -1;
    for (int i = 0; i < t; ++i) {
        if (cfg_.polygon_index(seq[i]) == polygon_index) {
            first = i;
            break;
        }
    }
    std::vector<int> rotated;
    rotated.reserve(t);
    for (int i = 0; i < t; ++i)
        rotated.push_back(ids[(first + i) % t]);
    return rotated;
}

IntervalTable Quiver::interval_table(VertexId owner, PolygonId at) const {
    int at_index = cfg_.polygon_index(at);
    if (is_truncated(cfg_, owner))
        throw PreconditionError("vertex '" + cfg_.vertex_labels[owner] +
                                "' is truncated and has no interval diagram");
    if (occ(cfg_, owner, at) == 0)
        throw PreconditionError("vertex '" + cfg_.vertex_labels[owner] +
                                "' does not occur in polygon " + std::to_string(at));

    auto rotated = rotation_at_first(owner, at_index);
    int t = static_cast<int>(rotated.size());
    IntervalTable table;
    table.owner = owner;
    table.at_index = at_index;
    for (int i = 0; i < t; ++i) {
        int visited = arrows_[rotated[i]].source;
        if (visited == at_index)
            table.runs.emplace_back();
        table.runs.back().push_back(visited);
    }
    return table;
}

std::vector<QuiverPath> Quiver::basis_paths(VertexId owner, PolygonId from, PolygonId to) const {
    int from_index = cfg_.polygon_index(from);
    int to_index = cfg_.polygon_index(to);
    if (from_index == to_index)
        throw PreconditionError("basis_paths requires two distinct polygons");
    if (owner < 0 || owner >= cfg_.vertex_count())
        throw UnknownIdError("unknown vertex id " + std::to_string(owner));
    if (occ(cfg_, owner, from) == 0 || occ(cfg_, owner, to) == 0)
        return {};

    auto rotated = rotation_at_first(owner, from_index);
    int t = static_cast<int>(rotated.size());
    std::int64_t mu = cfg_.multiplicity[owner];

    std::vector<int> from_positions, to_positions;
    for (int i = 0; i < t; ++i) {
        int visited = arrows_[rotated[i]].source;
        if (visited == from_index)
            from_positions.push_back(i);
        if (visited == to_index)
            to_positions.push_back(i);
    }

    std::vector<QuiverPath> paths;
    for (int target : to_positions) {
        for (int anchor : from_positions) {
            int walk = (target - anchor + t) % t;
            for (std::int64_t k = 0; k < mu; ++k) {
                QuiverPath path;
                path.start = from_index;
                for (std::int64_t rep = 0; rep < k; ++rep)
                    for (int i = 0; i < t; ++i)
                        path.arrows.push_back(rotated[(anchor + i) % t]);
                for (int i = 0; i < walk; ++i)
                    path.arrows.push_back(rotated[(anchor + i) % t]);
                paths.push_back(std::move(path));
            }
        }
    }
    return paths;
}

std::string Quiver::vertex_name(int polygon_index) const {
    return "v" + std::to_string(cfg_.polygons[polygon_index].id);
}

std::string Quiver::arrow_name(int id) const {
    const Arrow& a = arrow(id);
    return "a" + cfg_.vertex_labels[a.owner] + "_" + std::to_string(a.position);
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string Quiver::to_dot() const {
    std::ostringstream out;
    out << "digraph quiver {\n";
    out << "  // vertices: " << vertex_count() << "  arrows: " << arrow_count() << "\n";
    for (int i = 0; i < vertex_count(); ++i)
        out << "  \"" << dot_escape(vertex_name(i)) << "\";\n";
    for (const Arrow& a : arrows_) {
        out << "  \"" << dot_escape(vertex_name(a.source)) << "\" -> \""
            << dot_escape(vertex_name(a.target)) << "\" [label=\""
            << dot_escape(arrow_name(a.id)) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace brauer

#include "brauer/repr_theory.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <sstream>

namespace brauer {

bool CartanMatrix::symmetric() const {
    for (int i = 0; i < order(); ++i)
        for (int j = i + 1; j < order(); ++j)
            if (entries[i][j] != entries[j][i])
                return false;
    return true;
}

std::int64_t CartanMatrix::total() const {
    std::int64_t sum = 0;
    for (const auto& row : entries)
        for (std::int64_t e : row)
            sum = checked_add(sum, e);
    return sum;
}

std::string CartanMatrix::to_grid() const {
    std::size_t width = 1;
    for (const auto& row : entries)
        for (std::int64_t e : row)
            width = std::max(width, std::to_string(e).size());
    std::ostringstream out;
    for (const auto& row : entries) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::string cell = std::to_string(row[j]);
            if (j)
                out << " ";
            out << std::string(width - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
    return out.str();
}

std::string CartanMatrix::to_csv() const {
    std::ostringstream out;
    for (const auto& row : entries) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out << ",";
            out << row[j];
        }
        out << "\r\n";
    }
    return out.str();
}

namespace {

void require_valid(const Configuration& cfg) {
    auto report = validate(cfg);
    if (!report.ok())
        throw InvalidConfigurationError("configuration is not a Brauer configuration:\n" +
                                        report.to_string());
}

std::int64_t dim_hom_indexed(const Configuration& cfg, int vi, int wi) {
    const Polygon& pv = cfg.polygons[vi];
    std::int64_t sum = 0;
    if (vi == wi) {
        sum = 2;
        for (const auto& [vertex, count] : pv.members) {
            std::int64_t c = count;
            std::int64_t inner = checked_sub(checked_mul(c, cfg.multiplicity[vertex]), 1);
            sum = checked_add(sum, checked_mul(c, inner));
        }
        return sum;
    }
    const Polygon& pw = cfg.polygons[wi];
    for (const auto& [vertex, count] : pv.members) {
        std::int64_t other = pw.count_of(vertex);
        if (other == 0)
            continue;
        sum = checked_add(sum, checked_mul(cfg.multiplicity[vertex],
                                           checked_mul(std::int64_t{count}, other)));
    }
    return sum;
}

} // namespace

std::int64_t dim_hom(const Configuration& cfg, PolygonId v, PolygonId w) {
    return dim_hom_indexed(cfg, cfg.polygon_index(v), cfg.polygon_index(w));
}

CartanMatrix cartan_matrix(const Configuration& cfg) {
    require_valid(cfg);
    CartanMatrix m;
    for (const auto& p : cfg.polygons)
        m.ids.push_back(p.id);
    int n = cfg.polygon_count();
    m.entries.assign(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.entries[i][j] = dim_hom_indexed(cfg, i, j);
    return m;
}

std::int64_t uniserial_dim(const Configuration& cfg, const SpecialCycle& cycle, std::int64_t j) {
    if (cycle.owner < 0 || cycle.owner >= cfg.vertex_count())
        throw UnknownIdError("cycle owner out of range");
    std::int64_t top = checked_mul(cfg.multiplicity[cycle.owner],
                                   static_cast<std::int64_t>(cycle.arrows.size()));
    if (j < 1 || j > top)
        throw PreconditionError("uniserial index " + std::to_string(j) +
                                " outside 1.." + std::to_string(top));
    return top - j + 1;
}

std::int64_t length_of_sum(const Configuration& cfg, const std::vector<SpecialCycle>& cycles) {
    if (cycles.empty())
        throw PreconditionError("length_of_sum needs a nonempty cycle collection");
    std::set<std::pair<int, int>> distinct;
    for (const auto& c : cycles) {
        if (c.anchor != cycles.front().anchor)
            throw PreconditionError("length_of_sum needs cycles anchored at one common vertex");
        if (!distinct.insert({c.owner, c.start}).second)
            throw PreconditionError("length_of_sum got a duplicate cycle");
    }
    std::int64_t sum = 0;
    for (const auto& c : cycles)
        sum = checked_add(sum, checked_mul(cfg.multiplicity[c.owner],
                                           static_cast<std::int64_t>(c.arrows.size())));
    return sum - static_cast<std::int64_t>(cycles.size()) + 1;
}

std::int64_t projective_length(const Configuration& cfg, PolygonId v) {
    const Polygon& p = cfg.polygon(v);
    std::int64_t sum = 2;
    for (const auto& [vertex, count] : p.members) {
        std::int64_t factor =
            checked_sub(checked_mul(val(cfg, vertex), cfg.multiplicity[vertex]), 1);
        sum = checked_add(sum, checked_mul(std::int64_t{count}, factor));
    }
    return sum;
}

std::int64_t algebra_dim(const Configuration& cfg) {
    require_valid(cfg);
    std::int64_t polygons2 = checked_mul(2, cfg.polygon_count());

    std::int64_t by_vertex = polygons2;
    for (VertexId v = 0; v < cfg.vertex_count(); ++v) {
        std::int64_t value = val(cfg, v);
        std::int64_t factor = checked_sub(checked_mul(cfg.multiplicity[v], value), 1);
        by_vertex = checked_add(by_vertex, checked_mul(value, factor));
    }

    std::int64_t by_polygon = polygons2;
    for (const auto& p : cfg.polygons)
        by_polygon = checked_add(by_polygon, checked_sub(projective_length(cfg, p.id), 2));

    if (by_vertex != by_polygon)
        throw InternalCheckError("algebra dimension routes disagree: " +
                                 std::to_string(by_vertex) + " vs " + std::to_string(by_polygon));
    return by_vertex;
}

bool is_connected(const Configuration& cfg) {
    int nv = cfg.vertex_count();
    int np = cfg.polygon_count();
    if (nv + np == 0)
        return true;
    std::vector<bool> seen_vertex(nv, false), seen_polygon(np, false);
    std::vector<int> stack;  // vertices encoded as-is, polygons as nv + index
    if (np > 0) {
        seen_polygon[0] = true;
        stack.push_back(nv);
    } else {
        seen_vertex[0] = true;
        stack.push_back(0);
    }
    while (!stack.empty()) {
        int node = stack.back();
        stack.pop_back();
        if (node < nv) {
            for (int p = 0; p < np; ++p) {
                if (!seen_polygon[p] && cfg.polygons[p].count_of(node) > 0) {
                    seen_polygon[p] = true;
                    stack.push_back(nv + p);
                }
            }
        } else {
            for (const auto& [vertex, count] : cfg.polygons[node - nv].members) {
                if (!seen_vertex[vertex]) {
                    seen_vertex[vertex] = true;
                    stack.push_back(vertex);
                }
            }
        }
    }
    return std::all_of(seen_vertex.begin(), seen_vertex.end(), [](bool b) { return b; }) &&
           std::all_of(seen_polygon.begin(), seen_polygon.end(), [](bool b) { return b; });
}

bool all_polygons_sets(const Configuration& cfg) {
    return std::all_of(cfg.polygons.begin(), cfg.polygons.end(),
                       [](const Polygon& p) { return p.is_set(); });
}

std::int64_t center_dim(const Configuration& cfg) {
    require_valid(cfg);
    for (const auto& p : cfg.polygons)
        if (!p.is_set())
            throw PreconditionError("polygon " + std::to_string(p.id) + " is not a set");
    if (!is_connected(cfg))
        throw PreconditionError("configuration is disconnected");
    std::int64_t sum = 1;
    for (VertexId v = 0; v < cfg.vertex_count(); ++v)
        sum = checked_add(sum, cfg.multiplicity[v]);
    sum = checked_add(sum, cfg.polygon_count());
    return checked_sub(sum, cfg.vertex_count());
}

bool row_identity_holds(const Configuration& cfg, PolygonId v) {
    const Polygon& p = cfg.polygon(v);
    std::int64_t lhs = 0;
    for (const auto& [vertex, count] : p.members)
        lhs = checked_add(lhs, checked_mul(std::int64_t{count},
                                           checked_mul(val(cfg, vertex), cfg.multiplicity[vertex])));
    std::int64_t rhs = 0;
    for (const auto& w : cfg.polygons) {
        for (const auto& [vertex, count] : p.members) {
            std::int64_t other = w.count_of(vertex);
            if (other == 0)
                continue;
            rhs = checked_add(rhs, checked_mul(cfg.multiplicity[vertex],
                                               checked_mul(std::int64_t{count}, other)));
        }
    }
    return lhs == rhs;
}

bool DimensionReport::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

DimensionReport dimension_report(const Configuration& cfg) {
    require_valid(cfg);
    DimensionReport report;
    auto cartan = cartan_matrix(cfg);

    bool rows_match = true;
    for (int i = 0; i < cartan.order(); ++i) {
        std::int64_t row_sum = 0;
        for (int j = 0; j < cartan.order(); ++j)
            row_sum = checked_add(row_sum, cartan.entry(i, j));
        std::int64_t length = projective_length(cfg, cartan.ids[i]);
        report.projective_lengths.push_back({cartan.ids[i], length});
        if (row_sum != length)
            rows_match = false;
    }

    report.algebra_dimension = algebra_dim(cfg);

    bool zero_pattern = true;
    for (int i = 0; i < cartan.order(); ++i) {
        for (int j = 0; j < cartan.order(); ++j) {
            if (i == j)
                continue;
            auto si = cfg.polygons[i].support();
            auto sj = cfg.polygons[j].support();
            std::vector<VertexId> common;
            std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                  std::back_inserter(common));
            if ((cartan.entry(i, j) == 0) != common.empty())
                zero_pattern = false;
        }
    }

    bool row_identity = true;
    for (const auto& p : cfg.polygons)
        if (!row_identity_holds(cfg, p.id))
            row_identity = false;

    if (!all_polygons_sets(cfg)) {
        for (const auto& p : cfg.polygons)
            if (!p.is_set()) {
                report.center_reason = "polygon " + std::to_string(p.id) + " is not a set";
                break;
            }
    } else if (!is_connected(cfg)) {
        report.center_reason = "configuration is disconnected";
    } else {
        report.center_dimension = center_dim(cfg);
    }

    report.checks = {
        {"cartan_symmetric", cartan.symmetric()},
        {"zero_pattern_matches_supports", zero_pattern},
        {"row_sums_equal_projective_lengths", rows_match},
        {"algebra_dim_equals_cartan_total", report.algebra_dimension == cartan.total()},
        {"row_identity_all_polygons", row_identity},
    };
    return report;
}

std::string report_to_json(const DimensionReport& report) {
    nlohmann::ordered_json doc;
    doc["projective_lengths"] = nlohmann::ordered_json::object();
    for (const auto& [id, length] : report.projective_lengths)
        doc["projective_lengths"][std::to_string(id)] = length;
    doc["algebra_dim"] = report.algebra_dimension;
    if (report.center_dimension)
        doc["center_dim"] = *report.center_dimension;
    else {
        doc["center_dim"] = nullptr;
        doc["center_dim_reason"] = report.center_reason;
    }
    doc["checks"] = nlohmann::ordered_json::object();
    for (const auto& [name, pass] : report.checks)
        doc["checks"][name] = pass;
    return doc.dump(2) + "\n";
}

} // namespace brauer

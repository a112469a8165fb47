#ifndef BRAUER_CONFIGURATION_HPP
#define BRAUER_CONFIGURATION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "brauer/common.hpp"

namespace brauer {

using VertexId = int;    // dense index into Configuration::vertex_labels
using PolygonId = int;   // user-chosen nonnegative label, unique per configuration

// A labeled multiset of vertices. Content is canonicalized to sorted
// (vertex, count) pairs, so two polygons with equal content compare equal
// while still being distinct objects through their ids.
struct Polygon {
    PolygonId id = 0;
    std::vector<std::pair<VertexId, int>> members;  // sorted by vertex, counts >= 1

    int total_size() const;
    int count_of(VertexId v) const;  // 0 when absent
    std::vector<VertexId> support() const;
    bool is_set() const;  // every count == 1

    bool operator==(const Polygon&) const = default;
};

// Raw polygon input before canonicalization: the multiset as a plain list.
struct PolygonSpec {
    PolygonId id = 0;
    std::vector<VertexId> members;
};

enum class ViolationKind { C1, C2, C3, Orientation };

struct Violation {
    ViolationKind kind;
    std::string detail;
};

// Violations are data, not errors: an invalid configuration can be built,
// inspected and reported on.
struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

struct Configuration {
    std::vector<std::string> vertex_labels;           // VertexId -> display label
    std::vector<Polygon> polygons;                    // ascending by id
    std::vector<std::int64_t> multiplicity;           // per vertex, all >= 1
    std::vector<std::vector<PolygonId>> orientation;  // successor sequences; empty for truncated vertices

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    int polygon_count() const { return static_cast<int>(polygons.size()); }

    bool has_vertex(VertexId v) const;
    bool has_polygon(PolygonId id) const;
    int polygon_index(PolygonId id) const;            // throws UnknownIdError
    const Polygon& polygon(PolygonId id) const;
    VertexId vertex_by_label(const std::string& label) const;  // throws UnknownIdError
};

// Assembles a configuration from raw parts: canonicalizes the multisets,
// fills multiplicity defaults (1), and synthesizes a successor sequence for
// every nontruncated vertex without one (polygons by ascending id, each
// repeated occ(v, P) times). Structural problems -- duplicate labels or ids,
// out-of-range vertices, nonpositive multiplicity -- throw. Violations of
// C1/C2/C3 and sequence mismatches do not; see validate().
Configuration make_configuration(std::vector<std::string> vertex_labels,
                                 std::vector<PolygonSpec> polygon_specs,
                                 std::map<VertexId, std::int64_t> mu = {},
                                 std::map<VertexId, std::vector<PolygonId>> orientation = {});

/// Number of times vertex v occurs in polygon p.
std::int64_t occ(const Configuration& cfg, VertexId v, PolygonId p);

/// Total occurrences of v across all polygons.
std::int64_t val(const Configuration& cfg, VertexId v);

/// True iff val(v) = multiplicity(v) = 1.
bool is_truncated(const Configuration& cfg, VertexId v);

/// The set of vertices occurring in polygon p.
std::vector<VertexId> support(const Configuration& cfg, PolygonId p);

// Checks C1 (every vertex occurs somewhere), C2 (every polygon has total
// size >= 2), C3 (every polygon has a vertex with val*mu > 1) and the
// successor-sequence bookkeeping (each nontruncated vertex carries a
// sequence listing polygon P exactly occ(v, P) times; truncated vertices
// carry none). Pure: repeated calls yield identical reports.
ValidationReport validate(const Configuration& cfg);

// JSON schema (see README):
//   { "vertices": [label...],
//     "polygons": [{"id": int, "members": [label...]}...],
//     "mu": {label: int, ...},              // optional, defaults to 1
//     "orientation": {label: [id...], ...}  // optional, defaults synthesized
//   }
Configuration configuration_from_json(const std::string& text);
std::string configuration_to_json(const Configuration& cfg);

} // namespace brauer

#endif // BRAUER_CONFIGURATION_HPP

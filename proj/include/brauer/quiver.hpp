#ifndef BRAUER_QUIVER_HPP
#define BRAUER_QUIVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/configuration.hpp"

namespace brauer {

struct Arrow {
    int id;        // dense, ordered by (owner, position)
    int source;    // polygon index
    int target;    // polygon index
    VertexId owner;
    int position;  // 1-based within the owner's successor sequence
};

// One rotation of the full arrow cycle generated by a vertex's successor
// sequence. `anchor` is the polygon index the cycle starts and ends at.
struct SpecialCycle {
    VertexId owner = -1;
    int start = 0;             // 1-based position of the first arrow
    std::vector<int> arrows;   // arrow ids, length val(owner)
    int anchor = -1;
};

// A composable arrow sequence.
struct QuiverPath {
    int start = -1;            // polygon index
    std::vector<int> arrows;   // arrow ids
};

// Decomposition of one vertex's cyclic diagram into the runs between
// consecutive occurrences of a fixed polygon. Run i starts at the i-th
// occurrence (inclusive) and stops before the next one, so summing a
// polygon's count over all runs recovers its occurrence count at the owner.
struct IntervalTable {
    VertexId owner = -1;
    int at_index = -1;                   // polygon index of the anchor
    std::vector<std::vector<int>> runs;  // polygon indexes visited, in order

    int interval_count() const { return static_cast<int>(runs.size()); }
    std::int64_t count(int interval, int polygon_index) const;
    std::int64_t total_count(int polygon_index) const;
};

class Quiver {
public:
    // One quiver vertex per polygon; for each nontruncated vertex of the
    // configuration, val(vertex) arrows following its successor sequence
    // with cyclic closure. Throws InvalidConfigurationError when
    // validate(cfg) reports violations.
    static Quiver build(const Configuration& cfg);

    const Configuration& config() const { return cfg_; }
    int vertex_count() const { return cfg_.polygon_count(); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int id) const;
    const std::vector<int>& arrows_of(VertexId owner) const;  // ids by position; empty when truncated

    // All rotations of the owner's arrow cycle (val(owner) cycles).
    std::vector<SpecialCycle> special_cycles(VertexId owner) const;

    // The occ(owner, at) rotations anchored at the given polygon. Throws
    // PreconditionError when the owner is truncated or does not occur there.
    std::vector<SpecialCycle> special_cycles_at(VertexId owner, PolygonId at) const;

    // Interval decomposition anchored at the first occurrence of `at` in the
    // owner's stored successor sequence. Same preconditions as above.
    IntervalTable interval_table(VertexId owner, PolygonId at) const;

    // The explicit path family from `from` to `to` contributed by `owner`:
    // for every occurrence of `to` in the owner's diagram, every anchored
    // cycle power below mu(owner) followed by the forward walk. Yields
    // mu * occ(owner, from) * occ(owner, to) pairwise distinct paths.
    // Requires from != to; returns an empty list when the owner does not
    // occur in both polygons.
    std::vector<QuiverPath> basis_paths(VertexId owner, PolygonId from, PolygonId to) const;

    std::string vertex_name(int polygon_index) const;  // "v{polygon-id}"
    std::string arrow_name(int id) const;              // "a{owner-label}_{position}"
    std::string to_dot() const;

private:
    Configuration cfg_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> arrows_by_owner_;

    Quiver() = default;
    // Arrow ids of the owner's cycle starting at the first occurrence of the
    // given polygon in its successor sequence.
    std::vector<int> rotation_at_first(VertexId owner, int polygon_index) const;
};

} // namespace brauer

#endif // BRAUER_QUIVER_HPP

#ifndef BRAUER_REPR_THEORY_HPP
#define BRAUER_REPR_THEORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauer/configuration.hpp"
#include "brauer/quiver.hpp"

namespace brauer {

// Square integer matrix indexed by the configuration's polygons, in id order.
struct CartanMatrix {
    std::vector<PolygonId> ids;
    std::vector<std::vector<std::int64_t>> entries;  // row-major

    int order() const { return static_cast<int>(ids.size()); }
    std::int64_t entry(int row, int col) const { return entries[row][col]; }
    bool symmetric() const;
    std::int64_t total() const;      // sum of all entries
    std::string to_grid() const;     // aligned integer grid
    std::string to_csv() const;      // comma-separated rows, CRLF line ends
};

// Dimension of the hom space between the projectives of the two polygons:
// off the diagonal, sum of mu * occ * occ over the common support; on the
// diagonal, 2 + sum of occ * (occ * mu - 1).
std::int64_t dim_hom(const Configuration& cfg, PolygonId v, PolygonId w);

// dim_hom over all ordered pairs. Throws InvalidConfigurationError when the
// configuration fails validation.
CartanMatrix cartan_matrix(const Configuration& cfg);

// Dimension of the j-th uniserial submodule determined by a special cycle:
// mu * val - j + 1 for 1 <= j <= mu * val.
std::int64_t uniserial_dim(const Configuration& cfg, const SpecialCycle& cycle, std::int64_t j);

// Length of the submodule sum over a nonempty duplicate-free collection of
// special cycles anchored at one common vertex: sum of mu * val minus the
// collection size, plus one.
std::int64_t length_of_sum(const Configuration& cfg, const std::vector<SpecialCycle>& cycles);

// Length (= dimension) of the projective module of a polygon:
// 2 + sum over the support of occ * (val * mu - 1).
std::int64_t projective_length(const Configuration& cfg, PolygonId v);

// Total algebra dimension, computed independently per vertex
// (2 * #polygons + sum of val * (mu * val - 1)) and per polygon
// (2 * #polygons + double sum of occ * (mu * val - 1)). The two routes must
// agree; disagreement throws InternalCheckError.
std::int64_t algebra_dim(const Configuration& cfg);

// Dimension of the center for a connected configuration whose polygons are
// all sets: 1 + sum of mu + #polygons - #vertices. Throws PreconditionError
// naming the failed hypothesis otherwise.
std::int64_t center_dim(const Configuration& cfg);

// Both sides of the per-polygon row identity, evaluated independently:
// sum over the support of occ * val * mu against the row of hom dimensions.
bool row_identity_holds(const Configuration& cfg, PolygonId v);

// Connectivity of the vertex-polygon incidence graph.
bool is_connected(const Configuration& cfg);
bool all_polygons_sets(const Configuration& cfg);

struct DimensionReport {
    std::vector<std::pair<PolygonId, std::int64_t>> projective_lengths;
    std::int64_t algebra_dimension = 0;
    std::optional<std::int64_t> center_dimension;
    std::string center_reason;  // set when center_dimension is absent
    std::vector<std::pair<std::string, bool>> checks;
    bool all_checks_pass() const;
};

DimensionReport dimension_report(const Configuration& cfg);
std::string report_to_json(const DimensionReport& report);

} // namespace brauer

#endif // BRAUER_REPR_THEORY_HPP

#ifndef BRAUER_LATTICE_HPP
#define BRAUER_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/group.hpp"

namespace brauer {

// The complete list of subgroups of a finite group, each as a sorted element
// list, ordered by (size, lexicographic). member_of[x] lists the subgroup
// indexes containing x, so occurrence(x) is just its length.
struct SubgroupLattice {
    std::vector<std::vector<int>> subgroups;
    std::vector<std::vector<int>> member_of;

    int count() const { return static_cast<int>(subgroups.size()); }
    std::int64_t occurrence(int element) const {
        return static_cast<std::int64_t>(member_of[element].size());
    }
    bool contains(int subgroup_index, int element) const;
};

// Exhaustive enumeration by closure saturation: seed with every cyclic
// subgroup, then for each known subgroup H and each element g outside it
// close H + {g} under the product, until no new subgroup appears. Groups
// larger than order_bound are rejected with PreconditionError.
SubgroupLattice subgroup_lattice(const FiniteGroup& g, int order_bound = 64);

// Subgroup-occurrence of one element, with range checking.
std::int64_t occurrence(const FiniteGroup& g, const SubgroupLattice& l, int element);

struct PropertyClause {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct PropertyReport {
    std::vector<PropertyClause> clauses;
    bool all_hold() const;
};

// The basic occurrence facts, each side of every equivalence computed from
// independent data: triviality, cyclicity, inverse symmetry, prime order,
// and maximality of the identity's occurrence.
PropertyReport occurrence_properties(const FiniteGroup& g, const SubgroupLattice& l);

std::string lattice_text(const FiniteGroup& g, const SubgroupLattice& l);
std::string occurrence_table_text(const FiniteGroup& g, const SubgroupLattice& l);

} // namespace brauer

#endif // BRAUER_LATTICE_HPP

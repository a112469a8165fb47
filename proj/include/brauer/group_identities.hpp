#ifndef BRAUER_GROUP_IDENTITIES_HPP
#define BRAUER_GROUP_IDENTITIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauer/configuration.hpp"
#include "brauer/group.hpp"
#include "brauer/lattice.hpp"

namespace brauer {

// Positive weight per group element with the identity pinned to 1.
struct MuAssignment {
    std::vector<std::int64_t> values;
};

MuAssignment constant_mu(const FiniteGroup& g);
MuAssignment element_order_mu(const FiniteGroup& g);
// Seeded, deterministic across platforms; values in [1, 5].
MuAssignment random_mu(const FiniteGroup& g, std::uint64_t seed);
MuAssignment mu_from_map(const FiniteGroup& g, const std::map<std::string, std::int64_t>& by_name);

// The configuration induced by a nontrivial group: one vertex per element,
// one set-polygon per subgroup other than the trivial one, canonical
// orientation. A prime-order group with constant weight 1 has no valid
// configuration (every vertex would be truncated); that case is flagged as
// prime_degenerate and its associated algebra is the dual numbers, center
// dimension 2.
struct InducedConfiguration {
    bool prime_degenerate = false;
    std::optional<Configuration> config;
};

InducedConfiguration induced_configuration(const FiniteGroup& g, const SubgroupLattice& l,
                                           const MuAssignment& mu);

struct IdentityVerdict {
    std::string name;
    bool holds = false;
    std::vector<std::int64_t> sides;  // independently computed values, equal iff holds
    std::string note;
};

struct VerificationReport {
    std::vector<IdentityVerdict> verdicts;
    bool all_hold() const;
};

// Weighted occurrence sum over one subgroup against the double sum of
// weights over its intersections with every subgroup.
IdentityVerdict verify_subgroup_occurrence_sum(const FiniteGroup& g, const SubgroupLattice& l,
                                               const MuAssignment& mu, int subgroup_index);

// Three routes to the weighted square-occurrence sum: directly, via
// per-subgroup occurrence sums, and via the intersection triple sum.
IdentityVerdict verify_occurrence_square_sum(const FiniteGroup& g, const SubgroupLattice& l,
                                             const MuAssignment& mu);

// Center dimension of the induced configuration (or 2 on the degenerate
// prime branch) against the subgroup count.
IdentityVerdict verify_center_subgroup_count(const FiniteGroup& g, const SubgroupLattice& l);

// Full per-group sweep: occurrence properties, both sum identities under
// the constant, element-order and `trials` seeded random weights, and the
// center identity.
VerificationReport verify_group(const FiniteGroup& g, const SubgroupLattice& l,
                                std::uint64_t seed, int trials);

// The divisor-arithmetic identities of the cyclic group of order n: for
// every divisor k, the occurrence sum over the order-k subgroup against the
// gcd sum and the order-weighted sum against the totient double sum; the
// sigma identity; both square-sum identities; and the multiplicative split
// over every coprime factorization of n. Left sides come from the lattice,
// right sides from plain divisor arithmetic.
VerificationReport cyclic_identities(std::int64_t n);

// Occurrence-sum multiplicativity for one coprime pair, verified both via
// three lattices and via sigma's multiplicativity.
IdentityVerdict verify_occurrence_multiplicativity(std::int64_t m, std::int64_t n);

} // namespace brauer

#endif // BRAUER_GROUP_IDENTITIES_HPP

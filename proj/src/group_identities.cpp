#include "brauer/group_identities.hpp"

#include <algorithm>
#include <numeric>

#include "brauer/numbers.hpp"
#include "brauer/repr_theory.hpp"

namespace brauer {

namespace {

void require_mu(const FiniteGroup& g, const MuAssignment& mu) {
    if (static_cast<int>(mu.values.size()) != g.order)
        throw PreconditionError("mu assignment size does not match the group order");
    if (mu.values[0] != 1)
        throw PreconditionError("mu must assign 1 to the identity");
    for (std::int64_t v : mu.values)
        if (v < 1)
            throw PreconditionError("mu values must be positive");
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

MuAssignment constant_mu(const FiniteGroup& g) {
    return {std::vector<std::int64_t>(g.order, 1)};
}

MuAssignment element_order_mu(const FiniteGroup& g) {
    return {g.element_order};
}

MuAssignment random_mu(const FiniteGroup& g, std::uint64_t seed) {
    MuAssignment mu;
    mu.values.assign(g.order, 1);
    std::uint64_t state = seed;
    for (int x = 1; x < g.order; ++x)
        mu.values[x] = 1 + static_cast<std::int64_t>(splitmix64(state) % 5);
    return mu;
}

MuAssignment mu_from_map(const FiniteGroup& g, const std::map<std::string, std::int64_t>& by_name) {
    MuAssignment mu;
    mu.values.assign(g.order, 1);
    for (const auto& [name, value] : by_name) {
        auto it = std::find(g.element_names.begin(), g.element_names.end(), name);
        if (it == g.element_names.end())
            throw UnknownIdError("unknown group element '" + name + "'");
        mu.values[it - g.element_names.begin()] = value;
    }
    require_mu(g, mu);
    return mu;
}

InducedConfiguration induced_configuration(const FiniteGroup& g, const SubgroupLattice& l,
                                           const MuAssignment& mu) {
    if (g.order <= 1)
        throw PreconditionError("induced configuration needs a nontrivial group");
    require_mu(g, mu);

    if (is_prime(g.order) &&
        std::all_of(mu.values.begin(), mu.values.end(), [](std::int64_t v) { return v == 1; })) {
        InducedConfiguration out;
        out.prime_degenerate = true;
        return out;
    }

    std::vector<PolygonSpec> polygons;
    for (int s = 0; s < l.count(); ++s) {
        if (l.subgroups[s].size() == 1)
            continue;  // skip the trivial subgroup
        polygons.push_back({s, l.subgroups[s]});
    }
    std::map<VertexId, std::int64_t> mu_map;
    for (int x = 0; x < g.order; ++x)
        mu_map[x] = mu.values[x];

    InducedConfiguration out;
    out.config = make_configuration(g.element_names, std::move(polygons), std::move(mu_map));
    return out;
}

bool VerificationReport::all_hold() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.holds; });
}

IdentityVerdict verify_subgroup_occurrence_sum(const FiniteGroup& g, const SubgroupLattice& l,
                                               const MuAssignment& mu, int subgroup_index) {
    require_mu(g, mu);
    if (subgroup_index < 0 || subgroup_index >= l.count())
        throw UnknownIdError("unknown subgroup index " + std::to_string(subgroup_index));
    const auto& h = l.subgroups[subgroup_index];

    std::int64_t lhs = 0;
    for (int x : h)
        lhs = checked_add(lhs, checked_mul(mu.values[x], l.occurrence(x)));

    std::int64_t rhs = 0;
    for (int s = 0; s < l.count(); ++s)
        for (int x : h)
            if (l.contains(s, x))
                rhs = checked_add(rhs, mu.values[x]);

    IdentityVerdict verdict;
    verdict.name = "subgroup_occurrence_sum[H" + std::to_string(subgroup_index + 1) + "]";
    verdict.sides = {lhs, rhs};
    verdict.holds = lhs == rhs;
    return verdict;
}

IdentityVerdict verify_occurrence_square_sum(const FiniteGroup& g, const SubgroupLattice& l,
                                             const MuAssignment& mu) {
    require_mu(g, mu);

    std::int64_t direct = 0;
    for (int x = 0; x < g.order; ++x) {
        std::int64_t o = l.occurrence(x);
        direct = checked_add(direct, checked_mul(mu.values[x], checked_mul(o, o)));
    }

    std::int64_t per_subgroup = 0;
    for (int s = 0; s < l.count(); ++s)
        for (int x : l.subgroups[s])
            per_subgroup = checked_add(per_subgroup, checked_mul(mu.values[x], l.occurrence(x)));

    std::int64_t intersections = 0;
    for (int s = 0; s < l.count(); ++s)
        for (int t = 0; t < l.count(); ++t)
            for (int x : l.subgroups[s])
                if (l.contains(t, x))
                    intersections = checked_add(intersections, mu.values[x]);

    IdentityVerdict verdict;
    verdict.name = "occurrence_square_sum";
    verdict.sides = {direct, per_subgroup, intersections};
    verdict.holds = direct == per_subgroup && per_subgroup == intersections;
    return verdict;
}

IdentityVerdict verify_center_subgroup_count(const FiniteGroup& g, const SubgroupLattice& l) {
    auto induced = induced_configuration(g, l, constant_mu(g));
    std::int64_t center =
        induced.prime_degenerate ? 2 : center_dim(*induced.config);
    IdentityVerdict verdict;
    verdict.name = "center_equals_subgroup_count";
    verdict.sides = {center, l.count()};
    verdict.holds = center == l.count();
    if (induced.prime_degenerate)
        verdict.note = "prime order, dual-number branch";
    return verdict;
}

namespace {

IdentityVerdict aggregate_subgroup_sums(const FiniteGroup& g, const SubgroupLattice& l,
                                        const MuAssignment& mu, const std::string& label) {
    IdentityVerdict verdict;
    verdict.name = "subgroup_occurrence_sum[" + label + "]";
    verdict.holds = true;
    for (int s = 0; s < l.count(); ++s) {
        auto one = verify_subgroup_occurrence_sum(g, l, mu, s);
        if (!one.holds) {
            verdict.holds = false;
            verdict.note = "fails at H" + std::to_string(s + 1);
            verdict.sides = one.sides;
            return verdict;
        }
    }
    verdict.note = "all " + std::to_string(l.count()) + " subgroups";
    return verdict;
}

IdentityVerdict label_square_sum(const FiniteGroup& g, const SubgroupLattice& l,
                                 const MuAssignment& mu, const std::string& label) {
    auto verdict = verify_occurrence_square_sum(g, l, mu);
    verdict.name = "occurrence_square_sum[" + label + "]";
    return verdict;
}

} // namespace

VerificationReport verify_group(const FiniteGroup& g, const SubgroupLattice& l,
                                std::uint64_t seed, int trials) {
    VerificationReport report;
    for (const auto& clause : occurrence_properties(g, l).clauses)
        report.verdicts.push_back({"property." + clause.name, clause.holds, {}, clause.detail});

    report.verdicts.push_back(aggregate_subgroup_sums(g, l, constant_mu(g), "mu=1"));
    report.verdicts.push_back(label_square_sum(g, l, constant_mu(g), "mu=1"));
    report.verdicts.push_back(aggregate_subgroup_sums(g, l, element_order_mu(g), "mu=order"));
    report.verdicts.push_back(label_square_sum(g, l, element_order_mu(g), "mu=order"));

    bool subgroup_sums_hold = true, square_sums_hold = true;
    std::string subgroup_note, square_note;
    for (int t = 0; t < trials; ++t) {
        auto mu = random_mu(g, seed + static_cast<std::uint64_t>(t));
        auto a = aggregate_subgroup_sums(g, l, mu, "random");
        auto b = verify_occurrence_square_sum(g, l, mu);
        if (!a.holds) {
            subgroup_sums_hold = false;
            if (subgroup_note.empty())
                subgroup_note = "trial " + std::to_string(t) + ": " + a.note;
        }
        if (!b.holds) {
            square_sums_hold = false;
            if (square_note.empty())
                square_note = "trial " + std::to_string(t);
        }
    }
    std::string label = "mu=random,seed=" + std::to_string(seed) +
                        ",trials=" + std::to_string(trials);
    report.verdicts.push_back(
        {"subgroup_occurrence_sum[" + label + "]", subgroup_sums_hold, {}, subgroup_note});
    report.verdicts.push_back(
        {"occurrence_square_sum[" + label + "]", square_sums_hold, {}, square_note});

    if (g.order > 1)
        report.verdicts.push_back(verify_center_subgroup_count(g, l));
    return report;
}

namespace {

// The subgroup of the cyclic group of order n with exactly k elements:
// multiples of n/k.
std::vector<int> cyclic_subgroup(std::int64_t n, std::int64_t k) {
    std::vector<int> out;
    for (std::int64_t j = 0; j < k; ++j)
        out.push_back(static_cast<int>(j * (n / k)));
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t phi_weighted_sum(std::int64_t bound) {
    // sum of phi(t) * t over divisors t of bound
    std::int64_t total = 0;
    for (std::int64_t t : divisors(bound))
        total = checked_add(total, checked_mul(totient(t), t));
    return total;
}

} // namespace

VerificationReport cyclic_identities(std::int64_t n) {
    if (n < 1)
        throw PreconditionError("cyclic identities need n >= 1");
    FiniteGroup g = cyclic_group(static_cast<int>(n));
    SubgroupLattice lattice = subgroup_lattice(g, std::max<std::int64_t>(64, n));
    auto divs = divisors(n);

    VerificationReport report;

    {
        // One subgroup per divisor, and the divisor subgroups are exactly the lattice.
        IdentityVerdict verdict;
        verdict.name = "subgroups_match_divisors";
        verdict.sides = {static_cast<std::int64_t>(lattice.count()),
                         static_cast<std::int64_t>(divs.size())};
        verdict.holds = lattice.count() == static_cast<int>(divs.size());
        for (std::int64_t k : divs) {
            auto expected = cyclic_subgroup(n, k);
            if (std::find(lattice.subgroups.begin(), lattice.subgroups.end(), expected) ==
                lattice.subgroups.end())
                verdict.holds = false;
        }
        report.verdicts.push_back(std::move(verdict));
    }

    for (std::int64_t k : divs) {
        auto h = cyclic_subgroup(n, k);

        std::int64_t occ_sum = 0, order_sum = 0;
        for (int x : h) {
            occ_sum = checked_add(occ_sum, lattice.occurrence(x));
            order_sum = checked_add(order_sum,
                                    checked_mul(g.element_order[x], lattice.occurrence(x)));
        }

        std::int64_t gcd_sum = 0, phi_sum = 0;
        for (std::int64_t d : divs) {
            gcd_sum = checked_add(gcd_sum, std::gcd(k, d));
            phi_sum = checked_add(phi_sum, phi_weighted_sum(std::gcd(k, d)));
        }

        report.verdicts.push_back({"occ_sum_vs_gcd[k=" + std::to_string(k) + "]",
                                   occ_sum == gcd_sum,
                                   {occ_sum, gcd_sum},
                                   ""});
        report.verdicts.push_back({"order_weighted_sum_vs_phi[k=" + std::to_string(k) + "]",
                                   order_sum == phi_sum,
                                   {order_sum, phi_sum},
                                   ""});
    }

    {
        std::int64_t occ_sum = 0;
        for (int x = 0; x < g.order; ++x)
            occ_sum = checked_add(occ_sum, lattice.occurrence(x));
        std::int64_t s = sigma(n);
        report.verdicts.push_back(
            {"occ_sum_equals_sigma", occ_sum == s, {occ_sum, s}, ""});
    }

    {
        std::int64_t square_sum = 0, order_square_sum = 0;
        for (int x = 0; x < g.order; ++x) {
            std::int64_t o = lattice.occurrence(x);
            square_sum = checked_add(square_sum, checked_mul(o, o));
            order_square_sum =
                checked_add(order_square_sum, checked_mul(g.element_order[x], checked_mul(o, o)));
        }
        std::int64_t gcd_double = 0, phi_double = 0;
        for (std::int64_t k : divs) {
            for (std::int64_t d : divs) {
                gcd_double = checked_add(gcd_double, std::gcd(k, d));
                phi_double = checked_add(phi_double, phi_weighted_sum(std::gcd(k, d)));
            }
        }
        report.verdicts.push_back({"occ_square_sum_vs_gcd", square_sum == gcd_double,
                                   {square_sum, gcd_double},
                                   ""});
        report.verdicts.push_back({"order_weighted_square_sum_vs_phi",
                                   order_square_sum == phi_double,
                                   {order_square_sum, phi_double},
                                   ""});
    }

    for (std::int64_t a : divs) {
        std::int64_t b = n / a;
        if (a > b)
            break;
        if (std::gcd(a, b) != 1)
            continue;
        report.verdicts.push_back(verify_occurrence_multiplicativity(a, b));
    }

    return report;
}

IdentityVerdict verify_occurrence_multiplicativity(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1 || std::gcd(m, n) != 1)
        throw PreconditionError("multiplicativity check needs coprime positive integers");

    auto occ_sum = [](std::int64_t order) {
        FiniteGroup g = cyclic_group(static_cast<int>(order));
        SubgroupLattice l = subgroup_lattice(g, std::max<std::int64_t>(64, order));
        std::int64_t total = 0;
        for (int x = 0; x < g.order; ++x)
            total = checked_add(total, l.occurrence(x));
        return total;
    };

    std::int64_t whole = occ_sum(checked_mul(m, n));
    std::int64_t split = checked_mul(occ_sum(m), occ_sum(n));

    IdentityVerdict verdict;
    verdict.name = "occ_sum_multiplicative[" + std::to_string(m) + "x" + std::to_string(n) + "]";
    verdict.sides = {whole, split};
    verdict.holds = whole == split;
    if (sigma(checked_mul(m, n)) != checked_mul(sigma(m), sigma(n))) {
        verdict.holds = false;
        verdict.note = "sigma route disagrees";
    }
    return verdict;
}

} // namespace brauer

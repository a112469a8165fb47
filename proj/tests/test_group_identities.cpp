#include <doctest.h>

#include "brauer/group_identities.hpp"
#include "brauer/numbers.hpp"
#include "brauer/repr_theory.hpp"

using namespace brauer;

namespace {

// A weight assignment valid for any nontrivial group: one element of index 1
// carries weight 2, so prime orders avoid the degenerate branch.
MuAssignment bumped_mu(const FiniteGroup& g) {
    auto mu = constant_mu(g);
    mu.values[1] = 2;
    return mu;
}

} // namespace

TEST_CASE("weight assignments") {
    auto g = cyclic_group(6);
    auto ones = constant_mu(g);
    CHECK(ones.values == std::vector<std::int64_t>(6, 1));

    auto orders = element_order_mu(g);
    CHECK(orders.values == std::vector<std::int64_t>{1, 6, 3, 2, 3, 6});

    auto r1 = random_mu(g, 42);
    auto r2 = random_mu(g, 42);
    CHECK(r1.values == r2.values);
    CHECK(r1.values[0] == 1);
    for (auto v : r1.values) {
        CHECK(v >= 1);
        CHECK(v <= 5);
    }
    CHECK(random_mu(g, 43).values != r1.values);

    auto mapped = mu_from_map(g, {{"2", 4}});
    CHECK(mapped.values == std::vector<std::int64_t>{1, 1, 4, 1, 1, 1});
    CHECK_THROWS_AS(mu_from_map(g, {{"zzz", 2}}), UnknownIdError);
    CHECK_THROWS_AS(mu_from_map(g, {{"0", 3}}), PreconditionError);
}

TEST_CASE("the induced configuration of the order-12 cyclic group") {
    auto g = cyclic_group(12);
    auto l = subgroup_lattice(g);
    auto induced = induced_configuration(g, l, constant_mu(g));
    REQUIRE(!induced.prime_degenerate);
    const auto& cfg = *induced.config;

    CHECK(cfg.vertex_count() == 12);
    CHECK(cfg.polygon_count() == 5);  // six subgroups minus the trivial one
    CHECK(validate(cfg).ok());
    CHECK(all_polygons_sets(cfg));
    CHECK(is_connected(cfg));
    CHECK(center_dim(cfg) == 6);
}

TEST_CASE("prime order with constant weight degenerates to the dual numbers") {
    auto g = cyclic_group(5);
    auto l = subgroup_lattice(g);
    auto induced = induced_configuration(g, l, constant_mu(g));
    CHECK(induced.prime_degenerate);
    CHECK(!induced.config.has_value());

    // A single weight above one restores a genuine configuration.
    auto fixed = induced_configuration(g, l, bumped_mu(g));
    REQUIRE(!fixed.prime_degenerate);
    CHECK(fixed.config->polygon_count() == 1);
    CHECK(validate(*fixed.config).ok());

    CHECK_THROWS_AS(induced_configuration(cyclic_group(1), subgroup_lattice(cyclic_group(1)),
                                          constant_mu(cyclic_group(1))),
                    PreconditionError);
}

TEST_CASE("valence in an induced configuration is occurrence, less one at the identity") {
    for (const auto& g : verification_catalog()) {
        auto l = subgroup_lattice(g);
        auto mu = is_prime(g.order) ? bumped_mu(g) : constant_mu(g);
        auto induced = induced_configuration(g, l, mu);
        REQUIRE(!induced.prime_degenerate);
        const auto& cfg = *induced.config;
        for (int x = 0; x < g.order; ++x)
            CHECK(val(cfg, x) == l.occurrence(x) - (x == 0 ? 1 : 0));
        if (!is_prime(g.order))
            CHECK(is_connected(cfg));
    }
}

TEST_CASE("subgroup occurrence sum identity, with the worked order-12 values") {
    auto g = cyclic_group(12);
    auto l = subgroup_lattice(g);

    auto verdict = verify_subgroup_occurrence_sum(g, l, constant_mu(g), 3);
    CHECK(verdict.holds);
    CHECK(verdict.sides == std::vector<std::int64_t>{14, 14});
    CHECK(verdict.name == "subgroup_occurrence_sum[H4]");

    // The trivial subgroup: both sides reduce to occ(e).
    auto trivial = verify_subgroup_occurrence_sum(g, l, constant_mu(g), 0);
    CHECK(trivial.holds);
    CHECK(trivial.sides == std::vector<std::int64_t>{6, 6});

    CHECK_THROWS_AS(verify_subgroup_occurrence_sum(g, l, constant_mu(g), 6), UnknownIdError);
}

TEST_CASE("subgroup occurrence sums hold for every subgroup under random weights") {
    auto s3 = symmetric_group(3);
    auto l = subgroup_lattice(s3);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto mu = random_mu(s3, seed);
        for (int h = 0; h < l.count(); ++h)
            CHECK(verify_subgroup_occurrence_sum(s3, l, mu, h).holds);
    }
}

TEST_CASE("square occurrence sum identity") {
    auto g12 = cyclic_group(12);
    auto verdict = verify_occurrence_square_sum(g12, subgroup_lattice(g12), constant_mu(g12));
    CHECK(verdict.holds);
    CHECK(verdict.sides == std::vector<std::int64_t>{90, 90, 90});

    auto g2 = cyclic_group(2);
    auto small = verify_occurrence_square_sum(g2, subgroup_lattice(g2), constant_mu(g2));
    CHECK(small.holds);
    CHECK(small.sides == std::vector<std::int64_t>{5, 5, 5});
}

TEST_CASE("center dimension equals the subgroup count") {
    auto z12 = cyclic_group(12);
    auto v = verify_center_subgroup_count(z12, subgroup_lattice(z12));
    CHECK(v.holds);
    CHECK(v.sides == std::vector<std::int64_t>{6, 6});

    auto z7 = cyclic_group(7);
    auto prime = verify_center_subgroup_count(z7, subgroup_lattice(z7));
    CHECK(prime.holds);
    CHECK(prime.sides == std::vector<std::int64_t>{2, 2});
    CHECK(!prime.note.empty());

    auto s3 = symmetric_group(3);
    auto sym = verify_center_subgroup_count(s3, subgroup_lattice(s3));
    CHECK(sym.holds);
    CHECK(sym.sides == std::vector<std::int64_t>{6, 6});
}

TEST_CASE("full verification reports") {
    for (const auto& g : {cyclic_group(12), symmetric_group(3), quaternion_group()}) {
        auto report = verify_group(g, subgroup_lattice(g), 7, 10);
        for (const auto& v : report.verdicts)
            CHECK_MESSAGE(v.holds, g.name, ": ", v.name);
    }
}

TEST_CASE("cyclic identities for the worked order-12 case") {
    auto report = cyclic_identities(12);
    CHECK(report.all_hold());
    bool saw_gcd14 = false, saw_sigma = false;
    for (const auto& v : report.verdicts) {
        if (v.name == "occ_sum_vs_gcd[k=4]") {
            saw_gcd14 = true;
            CHECK(v.sides == std::vector<std::int64_t>{14, 14});
        }
        if (v.name == "occ_sum_equals_sigma") {
            saw_sigma = true;
            CHECK(v.sides == std::vector<std::int64_t>{28, 28});
        }
    }
    CHECK(saw_gcd14);
    CHECK(saw_sigma);
}

TEST_CASE("cyclic identities across small orders") {
    for (std::int64_t n = 1; n <= 40; ++n)
        CHECK_MESSAGE(cyclic_identities(n).all_hold(), "n = ", n);
    CHECK_THROWS_AS(cyclic_identities(0), PreconditionError);
}

TEST_CASE("occurrence sums are multiplicative over coprime orders") {
    auto v = verify_occurrence_multiplicativity(3, 4);
    CHECK(v.holds);
    CHECK(v.sides == std::vector<std::int64_t>{28, 28});
    CHECK(verify_occurrence_multiplicativity(8, 25).holds);
    CHECK(verify_occurrence_multiplicativity(1, 9).holds);
    CHECK_THROWS_AS(verify_occurrence_multiplicativity(6, 4), PreconditionError);
}

#include <doctest.h>

#include <json.hpp>

#include "brauer/relations.hpp"
#include "brauer/repr_theory.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace brauer;
using namespace brauer::testing;

TEST_CASE("hom-space dimensions of the four-polygon sample") {
    auto cfg = fourpolygon_config();
    CHECK(dim_hom(cfg, 3, 3) == 10);
    CHECK(dim_hom(cfg, 1, 4) == 0);
    CHECK(dim_hom(cfg, 3, 4) == 2);
    CHECK(dim_hom(cfg, 1, 2) == 4);
    CHECK(dim_hom(cfg, 1, 1) == 4);
    CHECK(dim_hom(cfg, 4, 4) == 2);
    CHECK_THROWS_AS(dim_hom(cfg, 1, 99), UnknownIdError);
}

TEST_CASE("the Cartan matrix of the four-polygon sample") {
    auto m = cartan_matrix(fourpolygon_config());
    std::vector<std::vector<std::int64_t>> expected{
        {4, 4, 4, 0}, {4, 4, 4, 0}, {4, 4, 10, 2}, {0, 0, 2, 2}};
    CHECK(m.entries == expected);
    CHECK(m.symmetric());
    CHECK(m.total() == 48);
    CHECK(m.ids == std::vector<PolygonId>{1, 2, 3, 4});
}

TEST_CASE("set polygons with multiplicity one give 2s on the diagonal and intersection sizes off it") {
    // {a,b,c} and {b,c,d}: intersection size 2.
    auto cfg = make_configuration({"a", "b", "c", "d"}, {{0, {0, 1, 2}}, {1, {1, 2, 3}}});
    auto m = cartan_matrix(cfg);
    CHECK(m.entries == std::vector<std::vector<std::int64_t>>{{2, 2}, {2, 2}});

    auto chain = make_configuration({"a", "b", "c"}, {{0, {0, 1}}, {1, {1, 2}}});
    CHECK(cartan_matrix(chain).entries ==
          std::vector<std::vector<std::int64_t>>{{2, 1}, {1, 2}});
}

TEST_CASE("cartan matrix refuses invalid configurations") {
    auto bad = make_configuration({"a", "b", "c"}, {{0, {0, 1}}}, {{0, 2}});
    CHECK_THROWS_AS(cartan_matrix(bad), InvalidConfigurationError);
}

TEST_CASE("grid and csv renderings") {
    auto m = cartan_matrix(fourpolygon_config());
    CHECK(m.to_grid() ==
          " 4  4  4  0\n"
          " 4  4  4  0\n"
          " 4  4 10  2\n"
          " 0  0  2  2\n");
    CHECK(m.to_csv() == "4,4,4,0\r\n4,4,4,0\r\n4,4,10,2\r\n0,0,2,2\r\n");
}

TEST_CASE("uniserial dimensions walk down from mu*val to one") {
    auto cfg = fourpolygon_config();
    auto q = Quiver::build(cfg);
    auto cycle = q.special_cycles_at(0, 3)[0];  // owner "1": mu 2, val 4

    CHECK(uniserial_dim(cfg, cycle, 1) == 8);
    CHECK(uniserial_dim(cfg, cycle, 8) == 1);
    CHECK(uniserial_dim(cfg, cycle, 3) == 6);
    CHECK(uniserial_dim(cfg, cycle, 3) ==
          static_cast<std::int64_t>(uniserial_basis_by_listing(2, 4, 3).size()));
    for (std::int64_t j = 1; j <= 8; ++j)
        CHECK(uniserial_dim(cfg, cycle, j) ==
              static_cast<std::int64_t>(uniserial_basis_by_listing(2, 4, j).size()));

    CHECK_THROWS_AS(uniserial_dim(cfg, cycle, 0), PreconditionError);
    CHECK_THROWS_AS(uniserial_dim(cfg, cycle, 9), PreconditionError);
}

TEST_CASE("length of a sum of anchored uniserials") {
    auto cfg = fourpolygon_config();
    auto q = Quiver::build(cfg);

    auto one = q.special_cycles_at(2, 4);
    REQUIRE(one.size() == 1);
    CHECK(length_of_sum(cfg, one) == 3);  // mu * val of the single cycle

    std::vector<SpecialCycle> at_v3;
    for (auto& c : q.special_cycles_at(0, 3))
        at_v3.push_back(c);
    for (auto& c : q.special_cycles_at(2, 3))
        at_v3.push_back(c);
    CHECK(length_of_sum(cfg, at_v3) == 19);  // 8 + 8 + 3 + 3 - 4 + 1
    CHECK(length_of_sum(cfg, at_v3) == projective_length(cfg, 3) - 1);

    CHECK_THROWS_AS(length_of_sum(cfg, {}), PreconditionError);
    std::vector<SpecialCycle> duplicated{one[0], one[0]};
    CHECK_THROWS_AS(length_of_sum(cfg, duplicated), PreconditionError);
    std::vector<SpecialCycle> mixed{one[0], q.special_cycles_at(0, 1)[0]};
    CHECK_THROWS_AS(length_of_sum(cfg, mixed), PreconditionError);
}

TEST_CASE("projective lengths equal the Cartan row sums") {
    auto cfg = fourpolygon_config();
    CHECK(projective_length(cfg, 1) == 12);
    CHECK(projective_length(cfg, 2) == 12);
    CHECK(projective_length(cfg, 3) == 20);
    CHECK(projective_length(cfg, 4) == 4);

    auto minimal = single_loop_config(2);
    CHECK(projective_length(minimal, 0) == 3);
}

TEST_CASE("algebra dimension via both routes") {
    CHECK(algebra_dim(fourpolygon_config()) == 48);
    CHECK(algebra_dim(twoloop_config()) == 4);
    auto cfg = fourpolygon_config();
    CHECK(algebra_dim(cfg) == cartan_matrix(cfg).total());
}

TEST_CASE("center dimension for set-polygon connected configurations") {
    auto chain = make_configuration({"a", "b", "c"}, {{0, {0, 1}}, {1, {1, 2}}});
    CHECK(center_dim(chain) == 3);  // 1 + 3 + 2 - 3

    // No self-folded polygons means every loop comes from a val-1 vertex
    // with multiplicity above one.
    auto q = Quiver::build(chain);
    int loops = 0;
    for (const auto& a : q.arrows())
        if (a.source == a.target)
            ++loops;
    int mult_only = 0;
    for (VertexId v = 0; v < chain.vertex_count(); ++v)
        if (val(chain, v) == 1 && chain.multiplicity[v] > 1)
            ++mult_only;
    CHECK(loops == mult_only);

    CHECK_THROWS_WITH_AS(center_dim(fourpolygon_config()),
                         doctest::Contains("not a set"), PreconditionError);

    auto split = make_configuration({"a", "b", "c", "d"}, {{0, {0, 1}}, {1, {2, 3}}},
                                    {{0, 2}, {2, 2}});
    REQUIRE(validate(split).ok());
    CHECK_THROWS_WITH_AS(center_dim(split), doctest::Contains("disconnected"), PreconditionError);
}

TEST_CASE("loop census under set polygons, with multiplicities") {
    auto cfg = make_configuration({"a", "b", "c"}, {{0, {0, 1}}, {1, {1, 2}}},
                                  {{0, 3}, {2, 2}});
    REQUIRE(validate(cfg).ok());
    // center = 1 + (3 + 1 + 2) + 2 - 3
    CHECK(center_dim(cfg) == 6);
    auto q = Quiver::build(cfg);
    int loops = 0;
    for (const auto& a : q.arrows())
        if (a.source == a.target)
            ++loops;
    CHECK(loops == 2);  // vertices "a" and "c"
}

TEST_CASE("row identity holds on the fixtures") {
    auto cfg = fourpolygon_config();
    for (const auto& p : cfg.polygons)
        CHECK(row_identity_holds(cfg, p.id));

    // Both sides at the self-folded polygon evaluate to 22.
    std::int64_t lhs = 0;
    for (VertexId v : support(cfg, 3))
        lhs += occ(cfg, v, 3) * val(cfg, v) * cfg.multiplicity[v];
    CHECK(lhs == 22);
}

TEST_CASE("dimension report aggregates everything") {
    auto report = dimension_report(fourpolygon_config());
    CHECK(report.algebra_dimension == 48);
    CHECK(report.projective_lengths ==
          std::vector<std::pair<PolygonId, std::int64_t>>{{1, 12}, {2, 12}, {3, 20}, {4, 4}});
    CHECK(!report.center_dimension.has_value());
    CHECK(report.center_reason.find("not a set") != std::string::npos);
    CHECK(report.all_checks_pass());

    auto doc = nlohmann::json::parse(report_to_json(report));
    CHECK(doc["algebra_dim"] == 48);
    CHECK(doc["center_dim"].is_null());
    CHECK(doc["projective_lengths"]["3"] == 20);
    for (const auto& [key, value] : doc["checks"].items())
        CHECK(value.get<bool>());

    auto chain_report = dimension_report(make_configuration(
        {"a", "b", "c"}, {{0, {0, 1}}, {1, {1, 2}}}));
    REQUIRE(chain_report.center_dimension.has_value());
    CHECK(*chain_report.center_dimension == 3);
}
